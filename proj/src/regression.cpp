#include "ascheck/regression.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "ascheck/kernels.hpp"
#include "ascheck/numfmt.hpp"

namespace ascheck {

double LinearFit::gradient_norm() const {
    return kernels::nrm2(gradient);
}

namespace {

// Least-squares solve of min ||A u - f|| by Householder QR with column
// pivoting. A is destroyed. Returns the coefficient vector (in original
// column order), the residual norm, and the diagonal-ratio condition
// estimate max|r_kk| / min|r_kk|.
struct QrSolution {
    std::vector<double> coeffs;
    double residual_norm;
    double condition_estimate;
};

QrSolution pivoted_qr_solve(Matrix& a, std::vector<double>& f) {
    const std::size_t n_rows = a.rows();
    const std::size_t n_cols = a.cols();

    std::vector<std::size_t> perm(n_cols);
    for (std::size_t j = 0; j < n_cols; ++j) perm[j] = j;

    std::vector<double> diag(n_cols, 0.0);
    std::vector<double> v(n_rows);

    for (std::size_t k = 0; k < n_cols; ++k) {
        // pivot: bring the trailing column of largest remaining norm to k
        std::size_t pivot = k;
        double best = -1.0;
        for (std::size_t j = k; j < n_cols; ++j) {
            auto tail = a.column(j).subspan(k);
            const double nsq = kernels::dot(tail, tail);
            if (nsq > best) {
                best = nsq;
                pivot = j;
            }
        }
        if (pivot != k) {
            auto ck = a.column(k);
            auto cp = a.column(pivot);
            std::swap_ranges(ck.begin(), ck.end(), cp.begin());
            std::swap(perm[k], perm[pivot]);
        }

        const double sigma = std::sqrt(std::max(best, 0.0));
        if (sigma == 0.0) {
            // exactly dependent trailing columns
            diag[k] = 0.0;
            for (std::size_t j = k; j < n_cols; ++j) diag[j] = 0.0;
            break;
        }

        auto col = a.column(k);
        const double akk = col[k];
        const double alpha = akk >= 0.0 ? -sigma : sigma;
        // Householder vector for the trailing part of column k
        v[k] = akk - alpha;
        for (std::size_t r = k + 1; r < n_rows; ++r) v[r] = col[r];
        const double beta = 1.0 / (sigma * (sigma + std::abs(akk)));

        auto vt = std::span<const double>(v).subspan(k);
        for (std::size_t j = k + 1; j < n_cols; ++j) {
            auto cj = a.column(j).subspan(k);
            const double w = beta * kernels::dot(vt, cj);
            kernels::axpy(-w, vt, cj);
        }
        {
            auto ft = std::span<double>(f).subspan(k);
            const double w = beta * kernels::dot(vt, std::span<const double>(ft));
            kernels::axpy(-w, vt, ft);
        }
        col[k] = alpha;
        diag[k] = alpha;
    }

    double dmax = 0.0, dmin = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n_cols; ++k) {
        const double m = std::abs(diag[k]);
        dmax = std::max(dmax, m);
        dmin = std::min(dmin, m);
    }
    const double cond = (dmin == 0.0) ? std::numeric_limits<double>::infinity()
                                      : dmax / dmin;

    QrSolution sol;
    sol.condition_estimate = cond;
    if (!std::isfinite(cond) || cond > kConditionLimit) return sol;  // caller rejects

    // back-substitute R z = (Q^T f)[0:n_cols]
    std::vector<double> z(n_cols);
    for (std::size_t kk = n_cols; kk-- > 0;) {
        double s = f[kk];
        for (std::size_t j = kk + 1; j < n_cols; ++j) s -= a(kk, j) * z[j];
        z[kk] = s / diag[kk];
    }
    sol.coeffs.resize(n_cols);
    for (std::size_t j = 0; j < n_cols; ++j) sol.coeffs[perm[j]] = z[j];
    sol.residual_norm =
        kernels::nrm2(std::span<const double>(f).subspan(n_cols));
    return sol;
}

}  // namespace

LinearFit fit_linear(const Matrix& xhat, std::span<const double> outputs) {
    const std::size_t n = xhat.rows();
    const std::size_t m = xhat.cols();
    if (outputs.size() != n)
        throw DimensionError("outputs length " + std::to_string(outputs.size()) +
                             " does not match sample count " + std::to_string(n));
    if (n < m + 1)
        throw UnderdeterminedError(
            "need at least m+1 = " + std::to_string(m + 1) + " samples to fit " +
            std::to_string(m) + " gradient coefficients plus an intercept, got N = " +
            std::to_string(n) + "; add samples");

    // design matrix [1 | xhat]
    Matrix design(n, m + 1);
    std::fill(design.column(0).begin(), design.column(0).end(), 1.0);
    for (std::size_t i = 0; i < m; ++i) {
        auto src = xhat.column(i);
        std::copy(src.begin(), src.end(), design.column(i + 1).begin());
    }
    std::vector<double> rhs(outputs.begin(), outputs.end());

    QrSolution sol = pivoted_qr_solve(design, rhs);
    if (sol.coeffs.empty())
        throw RankDeficientError(
            "design matrix numerically rank deficient (condition estimate " +
            numfmt::shortest(sol.condition_estimate) +
            " exceeds 1e12); add samples or remove redundant parameters");

    LinearFit fit;
    fit.intercept = sol.coeffs[0];
    fit.gradient.assign(sol.coeffs.begin() + 1, sol.coeffs.end());
    fit.residual_norm = sol.residual_norm;
    fit.condition_estimate = sol.condition_estimate;
    fit.n_samples = n;
    fit.output_norm = kernels::nrm2(outputs);
    fit.output_rms = fit.output_norm / std::sqrt(static_cast<double>(n));

    const double mean = kernels::sum(outputs) / static_cast<double>(n);
    double tss = 0.0;
    for (double fj : outputs) {
        const double d = fj - mean;
        tss += d * d;
    }
    if (tss > 0.0) {
        fit.r_squared = std::clamp(
            1.0 - (fit.residual_norm * fit.residual_norm) / tss, 0.0, 1.0);
    } else {
        fit.r_squared = 1.0;  // constant outputs: the fit is exact
    }
    return fit;
}

LinearFit fit_linear(const SampleSet& s) { return fit_linear(s.xhat, s.outputs); }

double zero_gradient_threshold(const LinearFit& fit) {
    return 1e-12 * std::max(1.0, fit.output_rms);
}

std::optional<ActiveDirection> active_direction(const LinearFit& fit) {
    const double mag = fit.gradient_norm();
    if (mag <= zero_gradient_threshold(fit)) return std::nullopt;
    ActiveDirection dir;
    dir.magnitude = mag;
    dir.w.resize(fit.gradient.size());
    for (std::size_t i = 0; i < fit.gradient.size(); ++i) dir.w[i] = fit.gradient[i] / mag;
    return dir;
}

double angle_between_deg(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw DimensionError("angle_between_deg: length mismatch");
    const double na = kernels::nrm2(a);
    const double nb = kernels::nrm2(b);
    if (na == 0.0 || nb == 0.0) throw Error("angle_between_deg: zero vector");
    double diff = 0.0, sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double u = a[i] / na;
        const double v = b[i] / nb;
        diff += (u - v) * (u - v);
        sum += (u + v) * (u + v);
    }
    // 2 atan2(||u-v||, ||u+v||) is accurate where acos saturates
    return 2.0 * std::atan2(std::sqrt(diff), std::sqrt(sum)) * 180.0 / std::numbers::pi;
}

}  // namespace ascheck
