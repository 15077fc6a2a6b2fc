#include "ascheck/sampling.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <random>
#include <thread>

#include "ascheck/numfmt.hpp"

namespace ascheck {

std::size_t default_sample_count(std::size_t m) {
    if (m < 1) throw Error("default_sample_count: m must be >= 1");
    return 4 * m;
}

Matrix draw_samples(std::size_t m, std::size_t n, std::uint64_t seed) {
    if (m < 1 || n < 1) throw Error("draw_samples: need m >= 1 and N >= 1");
    std::mt19937_64 engine(seed);
    constexpr double kInv53 = 1.0 / 9007199254740992.0;  // 2^-53
    Matrix xhat(n, m);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < m; ++i) {
            const double u = static_cast<double>(engine() >> 11) * kInv53;  // [0,1)
            xhat(j, i) = 2.0 * u - 1.0;
        }
    }
    return xhat;
}

namespace {

std::string point_text(std::span<const double> x) {
    std::string s;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) s += ' ';
        s += numfmt::shortest(x[i]);
    }
    return s;
}

}  // namespace

SampleSet evaluate_model(const InputDomain& d, Matrix xhat, const ModelFn& model,
                         unsigned workers, std::optional<std::uint64_t> seed) {
    const std::size_t n = xhat.rows();
    const std::size_t m = xhat.cols();
    if (m != d.dimension())
        throw DimensionError("sample matrix has " + std::to_string(m) +
                             " columns, domain has " + std::to_string(d.dimension()));
    if (n == 0) throw Error("evaluate_model: empty sample matrix");
    for (std::size_t i = 0; i < m; ++i)
        for (double v : xhat.column(i))
            if (!(v >= -1.0 && v <= 1.0))
                throw Error("normalized sample outside [-1,1]: " + numfmt::shortest(v));

    Matrix physical(n, m);
    for (std::size_t i = 0; i < m; ++i)
        d.to_physical_column(i, xhat.column(i), physical.column(i));

    std::vector<double> outputs(n);
    auto eval_row = [&](std::size_t j) {
        std::vector<double> x = physical.row(j);
        double f;
        try {
            f = model(x);
        } catch (const std::exception& e) {
            throw EvaluationError("model failed at sample " + std::to_string(j) + " (x = " +
                                      point_text(x) + "): " + e.what(),
                                  j, std::move(x));
        }
        if (!std::isfinite(f))
            throw EvaluationError("model returned non-finite value " + numfmt::shortest(f) +
                                      " at sample " + std::to_string(j) + " (x = " +
                                      point_text(x) + ")",
                                  j, std::move(x));
        outputs[j] = f;
    };

    if (workers <= 1 || n == 1) {
        for (std::size_t j = 0; j < n; ++j) eval_row(j);
    } else {
        std::atomic<std::size_t> next{0};
        std::atomic<bool> failed{false};
        std::vector<std::exception_ptr> errors(n);
        auto work = [&] {
            while (!failed.load(std::memory_order_relaxed)) {
                const std::size_t j = next.fetch_add(1, std::memory_order_relaxed);
                if (j >= n) break;
                try {
                    eval_row(j);
                } catch (...) {
                    errors[j] = std::current_exception();
                    failed.store(true, std::memory_order_relaxed);
                }
            }
        };
        const std::size_t nthreads = std::min<std::size_t>(workers, n);
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (std::size_t t = 0; t < nthreads; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
        if (failed.load()) {
            for (std::size_t j = 0; j < n; ++j)
                if (errors[j]) std::rethrow_exception(errors[j]);
        }
    }

    return SampleSet{d, std::move(xhat), std::move(physical), std::move(outputs), seed};
}

}  // namespace ascheck
