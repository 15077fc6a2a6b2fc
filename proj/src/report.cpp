#include "ascheck/report.hpp"

#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "ascheck/errors.hpp"
#include "ascheck/numfmt.hpp"

namespace ascheck {

namespace {

// Readable rounding for diagnostics; w components and corners use exact
// shortest form instead so the printed direction is the computed one.
std::string g6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

void write_text_file(const std::string& text, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace

std::string to_text(const CheckReport& r) {
    const auto& d = r.domain;
    const std::size_t m = d.dimension();
    std::string s;
    s += "one-dimensional active subspace check\n";
    s += "======================================\n\n";
    s += "model:    " + r.model_label + "\n";
    s += "domain:   " + std::to_string(m) + (m == 1 ? " parameter\n" : " parameters\n");
    for (std::size_t i = 0; i < m; ++i) {
        s += "  " + d.parameter_name(i) + "  [" + numfmt::shortest(d.lower()[i]) + ", " +
             numfmt::shortest(d.upper()[i]) + "]\n";
    }
    s += "samples:  N = " + std::to_string(r.n_samples);
    if (r.seed)
        s += "  (seed " + std::to_string(*r.seed) + ")\n";
    else
        s += "  (ingested)\n";
    s += "\n";
    s += "linear fit (normalized coordinates)\n";
    s += "  intercept      " + g6(r.fit.intercept) + "\n";
    s += "  r_squared      " + g6(r.fit.r_squared) + "\n";
    s += "  residual_norm  " + g6(r.fit.residual_norm) + "\n";
    s += "  condition      " + g6(r.fit.condition_estimate) + "\n";
    s += "  gradient norm  " + g6(r.fit.gradient_norm()) + "  (zero threshold " +
         g6(r.zero_threshold) + ")\n\n";

    if (r.zero_gradient()) {
        s += "result: ZeroGradient\n";
        s += "  The fitted gradient is below the zero threshold: the model shows no\n";
        s += "  linear trend at this sample size. No direction, ranking, or corner\n";
        s += "  suggestion is produced. This also happens for models that vary only\n";
        s += "  symmetrically (even ridges), a known blind spot of the linear check.\n";
    } else {
        const auto& w = r.direction->w;
        s += "active direction w (unit gradient, direction of increase)\n";
        for (std::size_t i = 0; i < m; ++i)
            s += "  " + d.parameter_name(i) + "  " + numfmt::shortest(w[i]) + "\n";
        s += "\n";
        s += "importance ranking (|w_i| descending)\n";
        for (std::size_t k = 0; k < r.importance.size(); ++k) {
            const auto& e = r.importance[k];
            s += "  " + std::to_string(k + 1) + ". " + d.parameter_name(e.index) + "  " +
                 g6(e.weight) + "\n";
        }
        s += "\n";
        s += "trend of f against w'x\n";
        s += "  pearson_r          " + g6(r.metrics.pearson_r) + "\n";
        s += "  spearman_rho       " + g6(r.metrics.spearman_rho) + "\n";
        s += "  monotone_fraction  " + g6(r.metrics.monotone_fraction) + "\n\n";
        s += "corner suggestions (first place to look, not a guaranteed optimum)\n";
        const auto corner_line = [&](const char* label, const PhysicalPoint& p) {
            std::string line = "  ";
            line += label;
            for (std::size_t i = 0; i < m; ++i)
                line += " " + d.parameter_name(i) + "=" + numfmt::shortest(p.coords[i]);
            return line + "\n";
        };
        if (r.corner_max) s += corner_line("maximize f:", *r.corner_max);
        if (r.corner_min) s += corner_line("minimize f:", *r.corner_min);
        if (!r.tie_indices.empty()) {
            s += "  tied components (w_i = 0, upper bound by convention):";
            for (const auto i : r.tie_indices) s += " " + d.parameter_name(i);
            s += "\n";
        }
    }

    if (r.angle_deg) {
        s += "\nknown direction\n";
        s += "  angle(w, known)  " + g6(*r.angle_deg) + " degrees\n";
    }
    if (r.ridge_coefficients) {
        s += "\nridge coefficients c (from seed)\n ";
        for (const double v : *r.ridge_coefficients) s += " " + numfmt::shortest(v);
        s += "\n";
    }
    if (!r.files.empty()) {
        s += "\nfiles\n";
        for (const auto& [kind, path] : r.files) s += "  " + kind + ": " + path + "\n";
    }
    return s;
}

std::string to_json_text(const CheckReport& r) {
    using nlohmann::json;
    const auto& d = r.domain;
    const std::size_t m = d.dimension();

    json j;
    j["schema"] = "ascheck-report/1";
    j["model"] = r.model_label;

    json names = json::array();
    for (std::size_t i = 0; i < m; ++i) names.push_back(d.parameter_name(i));
    j["domain"] = {{"names", names},
                   {"lower", std::vector<double>(d.lower().begin(), d.lower().end())},
                   {"upper", std::vector<double>(d.upper().begin(), d.upper().end())}};
    j["n"] = r.n_samples;
    if (r.seed)
        j["seed"] = *r.seed;
    else
        j["seed"] = nullptr;

    j["fit"] = {{"intercept", r.fit.intercept},
                {"gradient", r.fit.gradient},
                {"gradient_norm", r.fit.gradient_norm()},
                {"residual_norm", r.fit.residual_norm},
                {"r_squared", r.fit.r_squared},
                {"condition_estimate", r.fit.condition_estimate},
                {"output_norm", r.fit.output_norm},
                {"output_rms", r.fit.output_rms}};
    j["zero_threshold"] = r.zero_threshold;
    j["zero_gradient"] = r.zero_gradient();

    if (r.zero_gradient()) {
        j["direction"] = nullptr;
    } else {
        j["direction"] = {{"w", r.direction->w}, {"magnitude", r.direction->magnitude}};
        json imp = json::array();
        for (std::size_t k = 0; k < r.importance.size(); ++k) {
            const auto& e = r.importance[k];
            imp.push_back({{"rank", k + 1},
                           {"index", e.index + 1},
                           {"parameter", d.parameter_name(e.index)},
                           {"weight", e.weight}});
        }
        j["importance"] = imp;
        j["metrics"] = {{"pearson_r", r.metrics.pearson_r},
                        {"spearman_rho", r.metrics.spearman_rho},
                        {"monotone_fraction", r.metrics.monotone_fraction}};
        json corners;
        if (r.corner_max) corners["maximize"] = r.corner_max->coords;
        if (r.corner_min) corners["minimize"] = r.corner_min->coords;
        json ties = json::array();
        for (const auto i : r.tie_indices) ties.push_back(i + 1);
        corners["tied_components"] = ties;
        j["corners"] = corners;
    }

    if (r.angle_deg) j["angle_to_known_direction_deg"] = *r.angle_deg;
    if (r.known_direction) j["known_direction"] = *r.known_direction;
    if (r.ridge_coefficients) j["ridge_coefficients"] = *r.ridge_coefficients;

    json files;
    for (const auto& [kind, path] : r.files) files[kind] = path;
    j["files"] = files;

    return j.dump(2) + "\n";
}

void write_report_files(const CheckReport& r, const std::filesystem::path& dir) {
    write_text_file(to_text(r), dir / "report.txt");
    write_text_file(to_json_text(r), dir / "report.json");
}

void write_scatter_csv(const SummaryScatter& sc, const std::filesystem::path& path) {
    std::string text = "y,f\n";
    for (std::size_t j = 0; j < sc.y.size(); ++j) {
        text += numfmt::shortest(sc.y[j]);
        text += ',';
        text += numfmt::shortest(sc.f[j]);
        text += '\n';
    }
    write_text_file(text, path);
}

}  // namespace ascheck
