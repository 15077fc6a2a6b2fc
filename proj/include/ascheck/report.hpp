#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ascheck/diagnostics.hpp"
#include "ascheck/regression.hpp"

namespace ascheck {

/// Everything one check run produced, ready for rendering. Built by the CLI
/// pipeline; to_text and to_json_text are pure so reports are deterministic
/// (no timestamps, no hostnames).
struct CheckReport {
    std::string model_label;  ///< command line, ingested CSV path, or builtin name
    InputDomain domain;
    std::size_t n_samples = 0;
    std::optional<std::uint64_t> seed;  ///< absent for ingested samples

    LinearFit fit;
    double zero_threshold = 0.0;
    std::optional<ActiveDirection> direction;  ///< absent on ZeroGradient

    // Populated only when a direction exists.
    std::vector<ImportanceEntry> importance;
    TrendMetrics metrics;
    std::optional<PhysicalPoint> corner_max;
    std::optional<PhysicalPoint> corner_min;
    std::vector<std::size_t> tie_indices;

    // Builtin extras.
    std::optional<double> angle_deg;  ///< angle(w, known_direction)
    std::optional<std::vector<double>> known_direction;
    std::optional<std::vector<double>> ridge_coefficients;

    std::vector<std::pair<std::string, std::string>> files;  ///< kind -> path

    bool zero_gradient() const { return !direction.has_value(); }
};

/// Human-readable report (the contents of report.txt).
std::string to_text(const CheckReport& r);

/// Machine-readable JSON equivalent (the contents of report.json), schema
/// key "ascheck-report/1". Doubles are serialized in shortest round-trip
/// form, so parsing recovers the exact values.
std::string to_json_text(const CheckReport& r);

/// Write report.txt and report.json into `dir`; the pair of paths is also
/// appended to r.files by the caller beforehand.
void write_report_files(const CheckReport& r, const std::filesystem::path& dir);

/// Write the scatter CSV: header `y,f`, one `projection,output` row per
/// sample, shortest round-trip formatting.
void write_scatter_csv(const SummaryScatter& sc, const std::filesystem::path& path);

}  // namespace ascheck
