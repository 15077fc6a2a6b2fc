#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "ascheck/domain.hpp"
#include "ascheck/matrix.hpp"

namespace ascheck {

/// A completed Monte Carlo design: N normalized samples, their physical
/// images, and the N model outputs. Invariants (enforced by the factories
/// below): every xhat entry in [-1,1], outputs.size() == xhat.rows(), all
/// outputs finite.
struct SampleSet {
    InputDomain domain;
    Matrix xhat;      ///< N x m, row j is the normalized sample for output j
    Matrix physical;  ///< N x m physical images of xhat
    std::vector<double> outputs;
    std::optional<std::uint64_t> seed;  ///< absent for ingested data

    std::size_t size() const { return outputs.size(); }
};

/// Default evaluation budget: 4 * m.
std::size_t default_sample_count(std::size_t m);

/// Draw an N x m matrix of independent uniforms on [-1,1].
///
/// Generator identity (stable across platforms and releases): std::mt19937_64
/// seeded with `seed`; each entry maps one engine output v to
/// 2 * ((v >> 11) / 2^53) - 1. Entries are drawn sample-major: sample 0
/// components 1..m, then sample 1, and so on. The same (seed, m, N)
/// reproduces the same matrix bit for bit.
Matrix draw_samples(std::size_t m, std::size_t n, std::uint64_t seed);

/// A scalar model evaluated at a physical point. May throw to signal
/// failure; returning a non-finite value is also treated as failure.
using ModelFn = std::function<double(std::span<const double>)>;

/// Evaluate the model at every row of `xhat` (mapped to physical
/// coordinates) and assemble the sample set.
///
/// Rows are independent; with workers > 1 they are evaluated concurrently,
/// results always assembled in row order, so the result is identical
/// regardless of scheduling. A failing row aborts the whole evaluation with
/// an EvaluationError carrying the row index and physical point (the lowest
/// failed row index observed).
SampleSet evaluate_model(const InputDomain& d, Matrix xhat, const ModelFn& model,
                         unsigned workers = 1,
                         std::optional<std::uint64_t> seed = std::nullopt);

}  // namespace ascheck
