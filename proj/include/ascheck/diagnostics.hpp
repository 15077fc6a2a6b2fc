#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ascheck/regression.hpp"
#include "ascheck/sampling.hpp"

namespace ascheck {

/// Quantitative companions to the visual judgment of a summary scatter.
/// Conventions for degenerate data (documented, asserted in tests): when the
/// outputs (or the projections) have zero variance, pearson_r and
/// spearman_rho are reported as 0; monotone_fraction of a single point is 1.
struct TrendMetrics {
    double pearson_r = 0.0;
    double spearman_rho = 0.0;
    /// Fraction of adjacent pairs with nondecreasing f after sorting by y
    /// (stable sort, ties keep sample order; equal f counts as nondecreasing).
    double monotone_fraction = 1.0;
};

/// The sufficient-summary data: projections y_j paired with the outputs f_j,
/// ready for plotting or serialization.
struct SummaryScatter {
    std::vector<double> y;  ///< y_j = w . xhat_j
    std::vector<double> f;  ///< outputs, in the same sample order
    std::vector<double> direction;              ///< the unit vector that produced y
    std::optional<std::size_t> coordinate;      ///< set when direction is a coordinate axis
    TrendMetrics metrics;
};

/// One parameter's share of the active direction.
struct ImportanceEntry {
    std::size_t index;  ///< zero-based parameter index
    double weight;      ///< |w_index|
};

TrendMetrics trend_metrics(std::span<const double> y, std::span<const double> f);

/// Project every sample onto the direction: y_j = w . xhat_j, with trend
/// metrics on (y, f). Throws DimensionError on mismatch.
SummaryScatter summary_projection(const SampleSet& s, const ActiveDirection& dir);

/// The coordinate special case: identical to summary_projection with w = e_i,
/// so y is just column i of the sample matrix. `i` is zero-based.
SummaryScatter coordinate_scatter(const SampleSet& s, std::size_t i);

/// Parameters ranked by |w_i| descending, ties broken by ascending index.
/// The signed components stay available on the ActiveDirection itself.
std::vector<ImportanceEntry> importance_weights(const ActiveDirection& dir);

enum class OptimizationSense { maximize, minimize };

/// The hypercube corner the direction points at: for maximize, upper bound
/// where w_i > 0, lower where w_i < 0; minimize flips both. Components with
/// w_i == 0 carry no information and go to the upper bound under either
/// sense (deterministic convention; see corner_ties).
PhysicalPoint corner_suggestion(const InputDomain& d, const ActiveDirection& dir,
                                OptimizationSense sense);

/// Indices with w_i == 0, where corner_suggestion applied the tie convention.
std::vector<std::size_t> corner_ties(const ActiveDirection& dir);

}  // namespace ascheck
