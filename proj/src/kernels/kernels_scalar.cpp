// Reference kernels. These define the semantics the SIMD variants are tested
// against: elementwise kernels use one fma per element, reductions accumulate
// left to right.

#include <algorithm>
#include <cmath>

#include "kernel_table.hpp"

namespace ascheck::kernels::detail {

namespace {

double dot_scalar(const double* x, const double* y, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc = std::fma(x[i], y[i], acc);
    return acc;
}

double sum_scalar(const double* x, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i];
    return acc;
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] = std::fma(a, x[i], y[i]);
}

void affine_scalar(double a, const double* x, double b, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = std::fma(a, x[i], b);
}

void scale_to_bounds_scalar(const double* xhat, double lo, double hi, double* out,
                            std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double w_lo = 1.0 - xhat[i];
        const double w_hi = 1.0 + xhat[i];
        const double v = 0.5 * std::fma(w_lo, lo, w_hi * hi);
        out[i] = std::min(std::max(v, lo), hi);
    }
}

}  // namespace

const KernelTable scalar_table = {
    dot_scalar, sum_scalar, axpy_scalar, affine_scalar, scale_to_bounds_scalar,
};

}  // namespace ascheck::kernels::detail
