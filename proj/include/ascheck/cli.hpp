#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace ascheck {

/// Which scatter artifacts the check emits (samples.csv and the reports are
/// always written).
enum class PlotKind { svg, csv, both };

struct CheckOptions {
    std::filesystem::path bounds;
    std::vector<std::string> model_cmd;                 ///< empty unless --model-cmd given
    std::optional<std::filesystem::path> samples_in;    ///< exclusive with model_cmd
    std::optional<std::size_t> n;                       ///< default 4m
    std::uint64_t seed = 0;
    std::filesystem::path out_dir = ".";
    unsigned workers = 1;
    PlotKind plot = PlotKind::both;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitZeroGradient = 2;

/// Run the full check: sample, evaluate (or ingest), fit, direction,
/// diagnostics, artifacts. Prints the text report to `out`. Returns 0 on
/// success, 2 on ZeroGradient (completed, no trend; report and samples still
/// written). Errors propagate as exceptions for the frontend to turn into
/// exit 1.
int run_check(const CheckOptions& opt, std::ostream& out);

/// Run the same pipeline against a builtin analytic model in-process,
/// additionally reporting the angle to its known direction. `opt.bounds`,
/// `opt.model_cmd`, and `opt.samples_in` are ignored.
int run_testfn(const std::string& name, const CheckOptions& opt, std::ostream& out);

/// Write a builtin's subprocess script and bounds file into `dir` and print
/// the paths. Returns 0.
int run_testfn_export(const std::string& name, std::uint64_t seed,
                      const std::filesystem::path& dir, std::ostream& out);

}  // namespace ascheck
