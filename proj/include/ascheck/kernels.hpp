#pragma once

#include <cstddef>
#include <span>

namespace ascheck::kernels {

/// Instruction sets the dispatcher can select between. `scalar` is the
/// reference implementation; SIMD variants are compiled per-platform and
/// picked at runtime from CPU feature flags.
enum class Isa { scalar, avx2 };

const char* isa_name(Isa isa);

/// The implementation currently in use.
Isa active_isa();

/// Whether `isa` was compiled in and is usable on this CPU.
bool isa_available(Isa isa);

/// Pin the implementation (throws ascheck::Error if unavailable). Intended
/// for equivalence tests and benchmarking; not thread-safe against
/// concurrent kernel calls.
void force_isa(Isa isa);

/// Undo force_isa and return to auto-detection.
void reset_isa();

// ---------------------------------------------------------------------------
// Kernels. Elementwise kernels (axpy, affine, scale_to_bounds) produce
// bit-identical results on every ISA: each output element is the same fixed
// sequence of IEEE operations (fused multiply-add on all paths). Reduction
// kernels (dot, sum) may differ across ISAs by accumulation order only;
// equivalence tests bound the difference.
// ---------------------------------------------------------------------------

/// Sum of x[i] * y[i]. Spans must have equal length.
double dot(std::span<const double> x, std::span<const double> y);

/// Sum of x[i].
double sum(std::span<const double> x);

/// y[i] += a * x[i].
void axpy(double a, std::span<const double> x, std::span<double> y);

/// out[i] = a * x[i] + b (single fma per element).
void affine(double a, std::span<const double> x, double b, std::span<double> out);

/// Map normalized coordinates in [-1,1] onto [lo, hi]:
///   out[i] = 0.5 * ((1 - x[i]) * lo + (1 + x[i]) * hi), clamped to [lo, hi].
/// Exact at the endpoints: x = +/-1 yields exactly hi / lo.
void scale_to_bounds(std::span<const double> xhat, double lo, double hi,
                     std::span<double> out);

/// Euclidean norm, sqrt(dot(x, x)).
double nrm2(std::span<const double> x);

}  // namespace ascheck::kernels
