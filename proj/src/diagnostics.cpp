#include "ascheck/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ascheck/kernels.hpp"

namespace ascheck {

namespace {

double pearson(std::span<const double> a, std::span<const double> b) {
    const std::size_t n = a.size();
    const double inv_n = 1.0 / static_cast<double>(n);
    const double ma = kernels::sum(a) * inv_n;
    const double mb = kernels::sum(b) * inv_n;
    double saa = 0.0, sbb = 0.0, sab = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double da = a[j] - ma;
        const double db = b[j] - mb;
        saa += da * da;
        sbb += db * db;
        sab += da * db;
    }
    if (saa <= 0.0 || sbb <= 0.0) return 0.0;  // degenerate: no variance
    return std::clamp(sab / std::sqrt(saa * sbb), -1.0, 1.0);
}

// average ranks, ties averaged
std::vector<double> ranks(std::span<const double> v) {
    const std::size_t n = v.size();
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t i, std::size_t j) { return v[i] < v[j]; });
    std::vector<double> r(n);
    std::size_t k = 0;
    while (k < n) {
        std::size_t e = k + 1;
        while (e < n && v[idx[e]] == v[idx[k]]) ++e;
        const double avg = 0.5 * (static_cast<double>(k) + static_cast<double>(e - 1)) + 1.0;
        for (std::size_t t = k; t < e; ++t) r[idx[t]] = avg;
        k = e;
    }
    return r;
}

}  // namespace

TrendMetrics trend_metrics(std::span<const double> y, std::span<const double> f) {
    if (y.size() != f.size()) throw DimensionError("trend_metrics: length mismatch");
    const std::size_t n = y.size();
    TrendMetrics m;
    if (n == 0) return m;

    m.pearson_r = pearson(y, f);
    m.spearman_rho = pearson(ranks(y), ranks(f));

    if (n == 1) {
        m.monotone_fraction = 1.0;
        return m;
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    // stable: duplicate y keep sample order, making the fraction deterministic
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return y[i] < y[j]; });
    std::size_t nondecreasing = 0;
    for (std::size_t j = 0; j + 1 < n; ++j)
        if (f[order[j + 1]] >= f[order[j]]) ++nondecreasing;
    m.monotone_fraction = static_cast<double>(nondecreasing) / static_cast<double>(n - 1);
    return m;
}

SummaryScatter summary_projection(const SampleSet& s, const ActiveDirection& dir) {
    const std::size_t m = s.xhat.cols();
    if (dir.w.size() != m)
        throw DimensionError("direction has " + std::to_string(dir.w.size()) +
                             " components, samples have " + std::to_string(m));
    SummaryScatter sc;
    sc.y.assign(s.size(), 0.0);
    for (std::size_t i = 0; i < m; ++i)
        kernels::axpy(dir.w[i], s.xhat.column(i), sc.y);
    sc.f = s.outputs;
    sc.direction = dir.w;
    sc.metrics = trend_metrics(sc.y, sc.f);
    return sc;
}

SummaryScatter coordinate_scatter(const SampleSet& s, std::size_t i) {
    const std::size_t m = s.xhat.cols();
    if (i >= m)
        throw DimensionError("coordinate index " + std::to_string(i) +
                             " out of range for m = " + std::to_string(m));
    ActiveDirection axis;
    axis.w.assign(m, 0.0);
    axis.w[i] = 1.0;
    axis.magnitude = 1.0;
    SummaryScatter sc = summary_projection(s, axis);
    sc.coordinate = i;
    return sc;
}

std::vector<ImportanceEntry> importance_weights(const ActiveDirection& dir) {
    std::vector<ImportanceEntry> out(dir.w.size());
    for (std::size_t i = 0; i < dir.w.size(); ++i) out[i] = {i, std::abs(dir.w[i])};
    std::sort(out.begin(), out.end(), [](const ImportanceEntry& a, const ImportanceEntry& b) {
        if (a.weight != b.weight) return a.weight > b.weight;
        return a.index < b.index;
    });
    return out;
}

PhysicalPoint corner_suggestion(const InputDomain& d, const ActiveDirection& dir,
                                OptimizationSense sense) {
    const std::size_t m = d.dimension();
    if (dir.w.size() != m)
        throw DimensionError("direction has " + std::to_string(dir.w.size()) +
                             " components, domain has " + std::to_string(m));
    const bool maximize = sense == OptimizationSense::maximize;
    PhysicalPoint corner;
    corner.coords.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        double signed_w = maximize ? dir.w[i] : -dir.w[i];
        // w_i == 0: the component carries no information; take the upper
        // bound under either sense so the two corners differ exactly where
        // w is nonzero
        corner.coords[i] = signed_w < 0.0 ? d.lower()[i] : d.upper()[i];
    }
    return corner;
}

std::vector<std::size_t> corner_ties(const ActiveDirection& dir) {
    std::vector<std::size_t> ties;
    for (std::size_t i = 0; i < dir.w.size(); ++i)
        if (dir.w[i] == 0.0) ties.push_back(i);
    return ties;
}

}  // namespace ascheck
