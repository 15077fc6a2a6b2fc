// AVX2+FMA kernels. Compiled only on x86-64 (with -mavx2 -mfma) and selected
// at runtime when the CPU reports both features.
//
// Elementwise kernels replicate the scalar operation sequence exactly
// (fma / sub / add / mul / min / max per element), so their results are
// bit-identical to the reference. Reductions use 4 vector accumulators and
// therefore differ from the reference only by summation order.

#include <immintrin.h>

#include <algorithm>
#include <cmath>

#include "kernel_table.hpp"

namespace ascheck::kernels::detail {

namespace {

double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d shuf = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, shuf));
}

double dot_avx2(const double* x, const double* y, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    __m256d acc2 = _mm256_setzero_pd();
    __m256d acc3 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4), acc1);
        acc2 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 8), _mm256_loadu_pd(y + i + 8), acc2);
        acc3 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 12), _mm256_loadu_pd(y + i + 12), acc3);
    }
    for (; i + 4 <= n; i += 4) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
    }
    acc0 = _mm256_add_pd(_mm256_add_pd(acc0, acc1), _mm256_add_pd(acc2, acc3));
    double acc = hsum(acc0);
    for (; i < n; ++i) acc = std::fma(x[i], y[i], acc);
    return acc;
}

double sum_avx2(const double* x, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(x + i));
        acc1 = _mm256_add_pd(acc1, _mm256_loadu_pd(x + i + 4));
    }
    for (; i + 4 <= n; i += 4) acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(x + i));
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) acc += x[i];
    return acc;
}

void axpy_avx2(double a, const double* x, double* y, std::size_t n) {
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
        _mm256_storeu_pd(y + i, vy);
    }
    for (; i < n; ++i) y[i] = std::fma(a, x[i], y[i]);
}

void affine_avx2(double a, const double* x, double b, double* out, std::size_t n) {
    const __m256d va = _mm256_set1_pd(a);
    const __m256d vb = _mm256_set1_pd(b);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(out + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), vb));
    }
    for (; i < n; ++i) out[i] = std::fma(a, x[i], b);
}

void scale_to_bounds_avx2(const double* xhat, double lo, double hi, double* out,
                          std::size_t n) {
    const __m256d ones = _mm256_set1_pd(1.0);
    const __m256d half = _mm256_set1_pd(0.5);
    const __m256d vlo = _mm256_set1_pd(lo);
    const __m256d vhi = _mm256_set1_pd(hi);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d x = _mm256_loadu_pd(xhat + i);
        const __m256d w_lo = _mm256_sub_pd(ones, x);
        const __m256d w_hi = _mm256_add_pd(ones, x);
        __m256d v = _mm256_mul_pd(half, _mm256_fmadd_pd(w_lo, vlo, _mm256_mul_pd(w_hi, vhi)));
        v = _mm256_min_pd(_mm256_max_pd(v, vlo), vhi);
        _mm256_storeu_pd(out + i, v);
    }
    for (; i < n; ++i) {
        const double w_lo = 1.0 - xhat[i];
        const double w_hi = 1.0 + xhat[i];
        const double v = 0.5 * std::fma(w_lo, lo, w_hi * hi);
        out[i] = std::min(std::max(v, lo), hi);
    }
}

}  // namespace

const KernelTable avx2_table = {
    dot_avx2, sum_avx2, axpy_avx2, affine_avx2, scale_to_bounds_avx2,
};

}  // namespace ascheck::kernels::detail
