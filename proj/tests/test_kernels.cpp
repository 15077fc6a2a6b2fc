#include "ascheck/kernels.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "ascheck/errors.hpp"

using namespace ascheck;

namespace {

std::vector<double> random_vec(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 eng(seed);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    std::vector<double> v(n);
    for (auto& x : v) x = u(eng);
    return v;
}

// Sizes that exercise the SIMD main loop, the unroll, and the scalar tail.
const std::vector<std::size_t> kSizes = {0, 1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 17, 31, 64, 1000, 1001};

class IsaGuard {
public:
    ~IsaGuard() { kernels::reset_isa(); }
};

}  // namespace

TEST(Kernels, ScalarAlwaysAvailable) {
    EXPECT_TRUE(kernels::isa_available(kernels::Isa::scalar));
    IsaGuard guard;
    kernels::force_isa(kernels::Isa::scalar);
    EXPECT_EQ(kernels::active_isa(), kernels::Isa::scalar);
}

TEST(Kernels, IsaNames) {
    EXPECT_STREQ(kernels::isa_name(kernels::Isa::scalar), "scalar");
    EXPECT_STREQ(kernels::isa_name(kernels::Isa::avx2), "avx2");
}

TEST(Kernels, ForceUnavailableThrows) {
    if (kernels::isa_available(kernels::Isa::avx2)) GTEST_SKIP() << "avx2 present";
    EXPECT_THROW(kernels::force_isa(kernels::Isa::avx2), Error);
}

TEST(Kernels, DotMatchesPlainLoop) {
    for (const auto n : kSizes) {
        const auto x = random_vec(n, 11 + n);
        const auto y = random_vec(n, 22 + n);
        long double expect = 0.0L;
        for (std::size_t i = 0; i < n; ++i) expect += static_cast<long double>(x[i]) * y[i];
        const double got = kernels::dot(x, y);
        EXPECT_NEAR(got, static_cast<double>(expect), 1e-12 * (1.0 + std::abs(got)))
            << "n=" << n;
    }
}

TEST(Kernels, SumMatchesPlainLoop) {
    for (const auto n : kSizes) {
        const auto x = random_vec(n, 33 + n);
        long double expect = 0.0L;
        for (const auto v : x) expect += v;
        EXPECT_NEAR(kernels::sum(x), static_cast<double>(expect), 1e-12 * (1.0 + n)) << "n=" << n;
    }
}

TEST(Kernels, AxpyMatchesDefinition) {
    const auto x = random_vec(9, 44);
    auto y = random_vec(9, 55);
    const auto y0 = y;
    kernels::axpy(2.5, x, y);
    for (std::size_t i = 0; i < x.size(); ++i)
        EXPECT_DOUBLE_EQ(y[i], std::fma(2.5, x[i], y0[i]));
}

TEST(Kernels, AffineMatchesDefinition) {
    const auto x = random_vec(9, 66);
    std::vector<double> out(9);
    kernels::affine(-1.25, x, 0.75, out);
    for (std::size_t i = 0; i < x.size(); ++i)
        EXPECT_DOUBLE_EQ(out[i], std::fma(-1.25, x[i], 0.75));
}

TEST(Kernels, ScaleToBoundsEndpointsExact) {
    const std::vector<double> xhat = {-1.0, 1.0, 0.0};
    std::vector<double> out(3);
    kernels::scale_to_bounds(xhat, 0.1, 0.3, out);
    EXPECT_EQ(out[0], 0.1);  // exactly the bound, not merely close
    EXPECT_EQ(out[1], 0.3);
    EXPECT_NEAR(out[2], 0.2, 1e-15);
}

TEST(Kernels, ScaleToBoundsStaysInsideRange) {
    const auto xhat = random_vec(1001, 77);  // in [-3,3]: forces the clamp path too
    std::vector<double> out(xhat.size());
    kernels::scale_to_bounds(xhat, -2.0, 5.5, out);
    for (const auto v : out) {
        EXPECT_GE(v, -2.0);
        EXPECT_LE(v, 5.5);
    }
}

TEST(Kernels, Nrm2) {
    const std::vector<double> v = {3.0, 4.0};
    EXPECT_DOUBLE_EQ(kernels::nrm2(v), 5.0);
    EXPECT_DOUBLE_EQ(kernels::nrm2(std::vector<double>{}), 0.0);
}

// Cross-ISA equivalence. Elementwise kernels must agree bit for bit;
// reductions may differ only by accumulation order.
TEST(Kernels, CrossIsaEquivalence) {
    if (!kernels::isa_available(kernels::Isa::avx2))
        GTEST_SKIP() << "avx2 not available on this host";
    IsaGuard guard;

    for (const auto n : kSizes) {
        const auto x = random_vec(n, 100 + n);
        const auto y = random_vec(n, 200 + n);

        kernels::force_isa(kernels::Isa::scalar);
        const double dot_s = kernels::dot(x, y);
        const double sum_s = kernels::sum(x);
        const double nrm_s = kernels::nrm2(x);
        auto axpy_s = y;
        kernels::axpy(1.7, x, axpy_s);
        std::vector<double> affine_s(n);
        kernels::affine(0.3, x, -2.0, affine_s);
        std::vector<double> scale_s(n);
        kernels::scale_to_bounds(x, -1.5, 2.5, scale_s);

        kernels::force_isa(kernels::Isa::avx2);
        const double dot_v = kernels::dot(x, y);
        const double sum_v = kernels::sum(x);
        const double nrm_v = kernels::nrm2(x);
        auto axpy_v = y;
        kernels::axpy(1.7, x, axpy_v);
        std::vector<double> affine_v(n);
        kernels::affine(0.3, x, -2.0, affine_v);
        std::vector<double> scale_v(n);
        kernels::scale_to_bounds(x, -1.5, 2.5, scale_v);

        EXPECT_NEAR(dot_v, dot_s, 1e-13 * (1.0 + std::abs(dot_s))) << "n=" << n;
        EXPECT_NEAR(sum_v, sum_s, 1e-13 * (1.0 + std::abs(sum_s))) << "n=" << n;
        EXPECT_NEAR(nrm_v, nrm_s, 1e-13 * (1.0 + nrm_s)) << "n=" << n;
        EXPECT_EQ(axpy_v, axpy_s) << "axpy must be bit-identical, n=" << n;
        EXPECT_EQ(affine_v, affine_s) << "affine must be bit-identical, n=" << n;
        EXPECT_EQ(scale_v, scale_s) << "scale_to_bounds must be bit-identical, n=" << n;
    }
}

TEST(Kernels, ResetRestoresDetection) {
    IsaGuard guard;
    kernels::force_isa(kernels::Isa::scalar);
    kernels::reset_isa();
    if (kernels::isa_available(kernels::Isa::avx2))
        EXPECT_EQ(kernels::active_isa(), kernels::Isa::avx2);
    else
        EXPECT_EQ(kernels::active_isa(), kernels::Isa::scalar);
}
