#include "ascheck/domain.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <limits>
#include <random>

#include "support/subprocess.hpp"

using namespace ascheck;

TEST(DomainConstruction, RejectsBadBounds) {
    EXPECT_THROW(InputDomain({}, {}), BoundsError);
    EXPECT_THROW(InputDomain({0.0}, {1.0, 2.0}), BoundsError);
    EXPECT_THROW(InputDomain({0.0}, {0.0}), BoundsError);   // degenerate range
    EXPECT_THROW(InputDomain({1.0}, {0.0}), BoundsError);   // reversed
    EXPECT_THROW(InputDomain({0.0}, {std::nan("")}), BoundsError);
    EXPECT_THROW(InputDomain({-std::numeric_limits<double>::infinity()}, {0.0}), BoundsError);
    EXPECT_THROW(InputDomain({0.0, 0.0}, {1.0, 1.0}, {"a"}), BoundsError);
    EXPECT_THROW(InputDomain({0.0, 0.0}, {1.0, 1.0}, {"a", "a"}), BoundsError);
    EXPECT_THROW(InputDomain({0.0, 0.0}, {1.0, 1.0}, {"a", ""}), BoundsError);
}

TEST(DomainConstruction, NamesOptional) {
    const InputDomain unnamed({0.0, 0.0}, {1.0, 1.0});
    EXPECT_EQ(unnamed.parameter_name(0), "x1");
    EXPECT_EQ(unnamed.parameter_name(1), "x2");
    const InputDomain named({0.0}, {1.0}, {"pressure"});
    EXPECT_EQ(named.parameter_name(0), "pressure");
}

TEST(DomainMap, ToPhysicalExamples) {
    const InputDomain d1({0.0}, {2.0});
    EXPECT_EQ(d1.to_physical({{1.0}}).coords[0], 2.0);
    EXPECT_EQ(d1.to_physical({{-1.0}}).coords[0], 0.0);

    const InputDomain d2({-3.0, 5.0}, {1.0, 9.0});
    const auto x = d2.to_physical({{0.0, 0.0}});
    EXPECT_DOUBLE_EQ(x.coords[0], -1.0);
    EXPECT_DOUBLE_EQ(x.coords[1], 7.0);
}

TEST(DomainMap, ToNormalizedExamples) {
    const InputDomain d1({0.0}, {2.0});
    EXPECT_DOUBLE_EQ(d1.to_normalized({{1.0}}).coords[0], 0.0);
    EXPECT_DOUBLE_EQ(d1.to_normalized({{2.0}}).coords[0], 1.0);

    const InputDomain d2({-3.0, 5.0}, {1.0, 9.0});
    const auto xhat = d2.to_normalized({{1.0, 5.0}});
    EXPECT_DOUBLE_EQ(xhat.coords[0], 1.0);
    EXPECT_DOUBLE_EQ(xhat.coords[1], -1.0);
}

TEST(DomainMap, DimensionMismatch) {
    const InputDomain d({0.0, 0.0}, {1.0, 1.0});
    EXPECT_THROW(d.to_physical({{0.0}}), DimensionError);
    EXPECT_THROW(d.to_normalized({{0.5, 0.5, 0.5}}), DimensionError);
}

TEST(DomainMap, EndpointExactness) {
    // Awkward bounds where the naive half-sum form would drift off the ends.
    const std::vector<std::pair<double, double>> ranges = {
        {0.1, 0.3}, {-1e-8, 1e8}, {1e-300, 2e-300}, {-7.123456789, -7.123456788}, {3.0, 1e17}};
    for (const auto& [lo, hi] : ranges) {
        const InputDomain d({lo}, {hi});
        EXPECT_EQ(d.to_physical({{1.0}}).coords[0], hi) << lo << " " << hi;
        EXPECT_EQ(d.to_physical({{-1.0}}).coords[0], lo) << lo << " " << hi;
        EXPECT_DOUBLE_EQ(d.to_normalized({{hi}}).coords[0], 1.0);
        EXPECT_DOUBLE_EQ(d.to_normalized({{lo}}).coords[0], -1.0);
    }
}

TEST(DomainMap, RoundTripProperty) {
    std::mt19937_64 eng(99);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const InputDomain d({-3.0, 1e-6, 100.0}, {7.5, 2e-6, 101.0});
    for (int trial = 0; trial < 2000; ++trial) {
        NormalizedPoint xhat{{u(eng), u(eng), u(eng)}};
        const auto x = d.to_physical(xhat);
        const auto back = d.to_normalized(x);
        const auto x2 = d.to_physical(back);
        for (std::size_t i = 0; i < 3; ++i) {
            // Round trip to 1e-12 relative to the coordinate scale of the
            // parameter (|x| or its half-range, whichever is larger).
            const double scale =
                std::max(std::abs(x.coords[i]), 0.5 * (d.upper()[i] - d.lower()[i]));
            EXPECT_NEAR(x2.coords[i], x.coords[i], 1e-12 * scale);
            EXPECT_NEAR(back.coords[i], xhat.coords[i], 1e-12);
        }
    }
}

TEST(DomainMap, Monotonicity) {
    const InputDomain d({-2.5}, {13.0});
    double prev = d.to_physical({{-1.0}}).coords[0];
    for (int k = 1; k <= 100; ++k) {
        const double xh = -1.0 + 2.0 * k / 100.0;
        const double x = d.to_physical({{xh}}).coords[0];
        EXPECT_GT(x, prev);
        prev = x;
    }
}

TEST(DomainMap, SlackClampsTinyViolations) {
    const InputDomain d({0.0}, {2.0});
    // Violation within 1e-9 relative slack: clamped, not an error.
    const double eps = 2.0 * 1e-10;
    EXPECT_DOUBLE_EQ(d.to_normalized({{2.0 + eps}}).coords[0], 1.0);
    EXPECT_DOUBLE_EQ(d.to_normalized({{0.0 - eps}}).coords[0], -1.0);
    // Beyond the slack: error.
    EXPECT_THROW(d.to_normalized({{2.0 + 1e-8}}), OutOfBoundsError);
    EXPECT_THROW(d.to_normalized({{-0.1}}), OutOfBoundsError);
}

TEST(DomainMap, OutOfBoundsReportsRow) {
    const InputDomain d({0.0}, {1.0});
    const std::vector<double> column = {0.2, 0.4, 55.0, 0.6};
    std::vector<double> out(column.size());
    try {
        d.to_normalized_column(0, column, out);
        FAIL() << "expected OutOfBoundsError";
    } catch (const OutOfBoundsError& e) {
        EXPECT_EQ(e.row, 2u);
    }
}

TEST(BoundsFile, ParseRoundTrip) {
    testsup::TempDir tmp;
    const auto path = tmp / "b.txt";
    {
        std::ofstream out(path);
        out << "# comment line\n";
        out << "\n";
        out << "alpha -1 1\n";
        out << "  beta\t0.125 \t 4.5\n";
        out << "gamma -1e3 2.5e-2\n";
    }
    const InputDomain d = load_bounds_file(path);
    EXPECT_EQ(d.dimension(), 3u);
    EXPECT_EQ(d.names(), (std::vector<std::string>{"alpha", "beta", "gamma"}));
    EXPECT_EQ(d.lower()[1], 0.125);
    EXPECT_EQ(d.upper()[2], 2.5e-2);

    const auto path2 = tmp / "b2.txt";
    save_bounds_file(d, path2);
    EXPECT_EQ(load_bounds_file(path2), d);
}

TEST(BoundsFile, SavedAtFullPrecision) {
    testsup::TempDir tmp;
    const InputDomain d({0.1, -1.0 / 3.0}, {0.3, std::acos(-1.0)});
    const auto path = tmp / "b.txt";
    save_bounds_file(d, path);
    const InputDomain back = load_bounds_file(path);
    for (std::size_t i = 0; i < 2; ++i) {
        EXPECT_EQ(back.lower()[i], d.lower()[i]);  // exact: 17 significant digits round-trip
        EXPECT_EQ(back.upper()[i], d.upper()[i]);
    }
}

TEST(BoundsFile, Errors) {
    testsup::TempDir tmp;
    EXPECT_THROW(load_bounds_file(tmp / "missing.txt"), IoError);

    const auto bad = [&](const std::string& text) {
        const auto p = tmp / "bad.txt";
        std::ofstream(p) << text;
        return p;
    };
    EXPECT_THROW(load_bounds_file(bad("onlyname\n")), SchemaError);
    EXPECT_THROW(load_bounds_file(bad("a 1 2 3\n")), SchemaError);
    EXPECT_THROW(load_bounds_file(bad("a one 2\n")), SchemaError);
    EXPECT_THROW(load_bounds_file(bad("# nothing else\n")), SchemaError);
    EXPECT_THROW(load_bounds_file(bad("a 2 1\n")), BoundsError);
    EXPECT_THROW(load_bounds_file(bad("a 0 1\na 0 1\n")), BoundsError);  // duplicate name
}
