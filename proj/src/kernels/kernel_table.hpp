#pragma once

#include <cstddef>

namespace ascheck::kernels::detail {

struct KernelTable {
    double (*dot)(const double* x, const double* y, std::size_t n);
    double (*sum)(const double* x, std::size_t n);
    void (*axpy)(double a, const double* x, double* y, std::size_t n);
    void (*affine)(double a, const double* x, double b, double* out, std::size_t n);
    void (*scale_to_bounds)(const double* xhat, double lo, double hi, double* out,
                            std::size_t n);
};

extern const KernelTable scalar_table;

#if defined(ASCHECK_HAVE_AVX2)
extern const KernelTable avx2_table;
#endif

}  // namespace ascheck::kernels::detail
