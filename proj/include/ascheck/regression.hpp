#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ascheck/sampling.hpp"

namespace ascheck {

/// Least-squares linear model f(xhat) ~ intercept + gradient . xhat fitted
/// in normalized coordinates, plus fit diagnostics.
struct LinearFit {
    double intercept = 0.0;
    std::vector<double> gradient;  ///< the last m coefficients
    double residual_norm = 0.0;    ///< ||X u - f||_2 at the minimizer
    double r_squared = 1.0;        ///< 1 - residual^2 / sum (f - mean)^2, in [0,1]

    // diagnostics
    double condition_estimate = 1.0;  ///< pivoted-QR diagonal ratio of the design matrix
    double output_norm = 0.0;         ///< ||f||_2
    double output_rms = 0.0;          ///< ||f||_2 / sqrt(N)
    std::size_t n_samples = 0;

    double gradient_norm() const;
};

/// The unit-normalized gradient of the fitted linear model. Its orientation
/// is meaningful: w points in the direction of linear increase, so no sign
/// canonicalization is applied.
struct ActiveDirection {
    std::vector<double> w;   ///< unit vector, ||w|| = 1 to 1e-12
    double magnitude = 0.0;  ///< ||gradient||_2 before normalization
};

/// Condition-estimate ceiling beyond which the fit is rejected as rank
/// deficient: the direction is numerically meaningless at double precision.
inline constexpr double kConditionLimit = 1e12;

/// Fit the linear model by least squares on the ones-prepended design matrix
/// [1 | xhat], via Householder QR with column pivoting (an orthogonal
/// factorization, not normal equations).
///
/// The result depends only on (xhat, outputs); the domain's physical bounds
/// cannot change it. Throws UnderdeterminedError when N < m+1 and
/// RankDeficientError when the estimated condition number exceeds
/// kConditionLimit (add samples or remove redundant parameters).
LinearFit fit_linear(const SampleSet& s);

/// As fit_linear, for callers that hold a raw design. `xhat` is N x m;
/// the ones column is prepended internally.
LinearFit fit_linear(const Matrix& xhat, std::span<const double> outputs);

/// Scale-aware floor under which a gradient is reported as "no trend":
/// 1e-12 * max(1, output_rms). Constant models land here instead of
/// producing a garbage direction.
double zero_gradient_threshold(const LinearFit& fit);

/// Normalize the fitted gradient. Returns nullopt when the gradient norm is
/// at or below zero_gradient_threshold(fit) -- the ZeroGradient outcome, a
/// diagnostic result rather than an error.
std::optional<ActiveDirection> active_direction(const LinearFit& fit);

/// Angle between two direction vectors in degrees, accurate for tiny angles.
double angle_between_deg(std::span<const double> a, std::span<const double> b);

}  // namespace ascheck
