#include "ascheck/kernels.hpp"

#include <atomic>
#include <cmath>

#include "ascheck/errors.hpp"
#include "kernel_table.hpp"

namespace ascheck::kernels {

namespace {

using detail::KernelTable;

const KernelTable* table_for(Isa isa) {
    switch (isa) {
        case Isa::scalar:
            return &detail::scalar_table;
        case Isa::avx2:
#if defined(ASCHECK_HAVE_AVX2)
            if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
                return &detail::avx2_table;
#endif
            return nullptr;
    }
    return nullptr;
}

const KernelTable* detect() {
    if (const KernelTable* t = table_for(Isa::avx2)) return t;
    return &detail::scalar_table;
}

std::atomic<const KernelTable*> g_table{nullptr};

const KernelTable& active() {
    const KernelTable* t = g_table.load(std::memory_order_acquire);
    if (!t) {
        t = detect();
        g_table.store(t, std::memory_order_release);
    }
    return *t;
}

}  // namespace

const char* isa_name(Isa isa) {
    switch (isa) {
        case Isa::scalar: return "scalar";
        case Isa::avx2: return "avx2";
    }
    return "?";
}

Isa active_isa() {
    return &active() == &detail::scalar_table ? Isa::scalar : Isa::avx2;
}

bool isa_available(Isa isa) { return table_for(isa) != nullptr; }

void force_isa(Isa isa) {
    const KernelTable* t = table_for(isa);
    if (!t) throw Error(std::string("kernel ISA not available on this host: ") + isa_name(isa));
    g_table.store(t, std::memory_order_release);
}

void reset_isa() { g_table.store(detect(), std::memory_order_release); }

double dot(std::span<const double> x, std::span<const double> y) {
    return active().dot(x.data(), y.data(), x.size() < y.size() ? x.size() : y.size());
}

double sum(std::span<const double> x) { return active().sum(x.data(), x.size()); }

void axpy(double a, std::span<const double> x, std::span<double> y) {
    active().axpy(a, x.data(), y.data(), x.size() < y.size() ? x.size() : y.size());
}

void affine(double a, std::span<const double> x, double b, std::span<double> out) {
    active().affine(a, x.data(), b, out.data(), x.size() < out.size() ? x.size() : out.size());
}

void scale_to_bounds(std::span<const double> xhat, double lo, double hi,
                     std::span<double> out) {
    active().scale_to_bounds(xhat.data(), lo, hi, out.data(),
                             xhat.size() < out.size() ? xhat.size() : out.size());
}

double nrm2(std::span<const double> x) { return std::sqrt(dot(x, x)); }

}  // namespace ascheck::kernels
