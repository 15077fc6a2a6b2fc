#include "ascheck/testfns.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "ascheck/errors.hpp"
#include "ascheck/model_io.hpp"
#include "ascheck/regression.hpp"
#include "support/oracles.hpp"
#include "support/subprocess.hpp"

using namespace ascheck;

namespace {

SampleSet sample(const AnalyticModel& model, std::uint64_t seed, std::size_t n) {
    return evaluate_model(model.domain, draw_samples(model.dimension(), n, seed),
                          model.evaluate, 1, seed);
}

}  // namespace

TEST(Builtin, Exp2) {
    const auto model = builtin("exp2");
    EXPECT_EQ(model.dimension(), 2u);
    const std::vector<double> ones = {1.0, 1.0};
    EXPECT_DOUBLE_EQ(model.evaluate(ones), std::exp(2.0));
    ASSERT_TRUE(model.known_direction.has_value());
    EXPECT_NEAR((*model.known_direction)[0], 0.70711, 5e-6);
    EXPECT_NEAR((*model.known_direction)[1], 0.70711, 5e-6);
    EXPECT_FALSE(model.ridge_coefficients.has_value());
}

TEST(Builtin, KnownDirectionsAreUnit) {
    for (const std::string name : {"exp2", "linear-4", "ridge-exp-7", "quartic-bowl-3"}) {
        const auto model = builtin(name, 5);
        ASSERT_TRUE(model.known_direction.has_value()) << name;
        double ss = 0.0;
        for (const double v : *model.known_direction) ss += v * v;
        EXPECT_NEAR(std::sqrt(ss), 1.0, 1e-12) << name;
    }
}

TEST(Builtin, ConstantIsFive) {
    const auto model = builtin("constant");
    const std::vector<double> x = {0.3, -0.9};
    EXPECT_EQ(model.evaluate(x), 5.0);
    EXPECT_FALSE(model.known_direction.has_value());
    const auto m5 = builtin("constant-5");
    EXPECT_EQ(m5.dimension(), 5u);
}

TEST(Builtin, DimensionSuffixParsing) {
    EXPECT_EQ(builtin("linear-10").dimension(), 10u);
    EXPECT_EQ(builtin("ridge-exp-3").dimension(), 3u);
    EXPECT_EQ(builtin("quartic-bowl-5").dimension(), 5u);
    EXPECT_EQ(builtin("quartic-bowl").dimension(), 2u);
    EXPECT_THROW(builtin("nope"), Error);
    EXPECT_THROW(builtin("linear-"), Error);
    EXPECT_THROW(builtin("linear-0"), Error);
    EXPECT_THROW(builtin("linear-2x"), Error);
    EXPECT_THROW(builtin("exp2-3"), Error);  // exp2 has a fixed dimension
    EXPECT_THROW(builtin(""), Error);
}

TEST(Builtin, CoefficientsDependOnlyOnSeed) {
    const auto a = builtin("ridge-exp-6", 42);
    const auto b = builtin("ridge-exp-6", 42);
    const auto c = builtin("ridge-exp-6", 43);
    EXPECT_EQ(*a.ridge_coefficients, *b.ridge_coefficients);
    EXPECT_NE(*a.ridge_coefficients, *c.ridge_coefficients);
    EXPECT_EQ(*a.known_direction, *a.ridge_coefficients);  // unit c is the direction
}

TEST(Builtin, LinearEvaluatesItsCoefficients) {
    const auto model = builtin("linear-3", 9);
    const auto& c = *model.ridge_coefficients;
    const std::vector<double> x = {0.5, -0.25, 1.0};
    EXPECT_DOUBLE_EQ(model.evaluate(x), c[0] * 0.5 + c[1] * -0.25 + c[2] * 1.0);
}

TEST(Builtin, ExactRecoveryThroughPipeline) {
    const auto model = builtin("linear-10", 123);
    const auto s = sample(model, 123, 44);
    const auto dir = active_direction(fit_linear(s));
    ASSERT_TRUE(dir.has_value());
    EXPECT_LT(angle_between_deg(dir->w, *model.known_direction), 1e-8);
}

TEST(Builtin, RidgeExpPipelineAngle) {
    for (const std::size_t m : {3u, 6u, 10u}) {
        const auto model = builtin("ridge-exp-" + std::to_string(m), 77);
        const auto s = sample(model, 77, 4000);
        const auto dir = active_direction(fit_linear(s));
        ASSERT_TRUE(dir.has_value());
        EXPECT_LT(angle_between_deg(dir->w, *model.known_direction), 2.0) << "m=" << m;
        EXPECT_LT(oracles::angle_deg(dir->w, *model.known_direction), 2.0) << "m=" << m;
    }
}

TEST(Builtin, QuarticBowlMagnitudeShrinksWithN) {
    // The even ridge is the check's blind spot: the fitted gradient magnitude
    // must fall as N grows (median over seeds).
    const auto median_magnitude = [](std::size_t n) {
        std::vector<double> mags;
        for (std::uint64_t seed = 0; seed < 11; ++seed) {
            const auto model = builtin("quartic-bowl-5", seed);
            const auto s = evaluate_model(model.domain, draw_samples(5, n, seed),
                                          model.evaluate, 1, seed);
            mags.push_back(fit_linear(s).gradient_norm());
        }
        std::sort(mags.begin(), mags.end());
        return mags[5];
    };
    const double small_n = median_magnitude(100);
    const double large_n = median_magnitude(10000);
    EXPECT_LT(large_n, small_n);
    EXPECT_LT(large_n, 0.05);
}

TEST(ExportScript, SpeaksTheProtocol) {
    testsup::TempDir tmp;
    const auto model = builtin("ridge-exp-4", 31);
    const auto script = export_script(model, tmp.path());
    EXPECT_TRUE(std::filesystem::exists(tmp / "ridge-exp-4.bounds"));

    // Reloading makes the generated labels explicit; bounds and labels match.
    const auto domain = load_bounds_file(tmp / "ridge-exp-4.bounds");
    ASSERT_EQ(domain.dimension(), model.domain.dimension());
    for (std::size_t i = 0; i < domain.dimension(); ++i) {
        EXPECT_EQ(domain.lower()[i], model.domain.lower()[i]);
        EXPECT_EQ(domain.upper()[i], model.domain.upper()[i]);
        EXPECT_EQ(domain.parameter_name(i), model.domain.parameter_name(i));
    }

    const ModelCommand cmd{{script.string()}, std::nullopt, 1};
    const std::vector<double> x = {0.25, -0.5, 0.75, 0.0};
    EXPECT_NEAR(run_model(cmd, x), model.evaluate(x), 1e-13 * std::abs(model.evaluate(x)));
}

TEST(ExportScript, WrongArityFails) {
    testsup::TempDir tmp;
    const auto script = export_script(builtin("exp2"), tmp.path());
    const ModelCommand cmd{{script.string()}, std::nullopt, 1};
    const std::vector<double> x = {0.0, 0.0, 0.0};
    try {
        run_model(cmd, x);
        FAIL() << "expected ModelError";
    } catch (const ModelError& e) {
        EXPECT_EQ(e.kind, ModelError::Kind::nonzero_exit);
        EXPECT_EQ(e.exit_status, 64);
    }
}

TEST(ExportScript, ConstantThroughSubprocess) {
    testsup::TempDir tmp;
    const auto script = export_script(builtin("constant"), tmp.path());
    const ModelCommand cmd{{script.string()}, std::nullopt, 1};
    const std::vector<double> x = {0.1, 0.2};
    EXPECT_EQ(run_model(cmd, x), 5.0);
}
