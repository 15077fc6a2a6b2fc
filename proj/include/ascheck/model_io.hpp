#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ascheck/sampling.hpp"

namespace ascheck {

/// An external black-box model launched once per evaluation.
///
/// Protocol: the point is written to the child's standard input as one line
/// of space-separated full-precision decimals ("v1 v2 ... vm\n"); the child
/// prints the scalar output to standard output and exits 0. The first
/// whitespace-delimited token of the last nonempty stdout line is parsed as
/// the result, so solvers may log progress above it. Standard error passes
/// through to the user.
struct ModelCommand {
    std::vector<std::string> argv;            ///< program and fixed arguments
    std::optional<double> timeout_sec;        ///< per-evaluation wall clock; absent = none
    unsigned workers = 1;                     ///< max concurrent evaluations
};

/// One completed external evaluation.
struct EvaluationRecord {
    std::vector<double> point;
    double output = 0.0;
    double wall_seconds = 0.0;
    int exit_status = 0;
};

/// Run one evaluation. Throws ModelError on NonzeroExit / Timeout /
/// ParseFailure / NonFinite, always carrying the physical point.
EvaluationRecord run_model_record(const ModelCommand& cmd, std::span<const double> x);

/// As run_model_record, returning just the scalar.
double run_model(const ModelCommand& cmd, std::span<const double> x);

/// Bind a command into a ModelFn for evaluate_model. Calls share no state,
/// so the sampling layer may fan them out across cmd.workers processes.
ModelFn subprocess_model(ModelCommand cmd);

/// Read a sample CSV (header `x1,...,xm,f` or the domain's parameter names;
/// physical coordinates). Ingested physical values are kept verbatim, so
/// persist_csv(ingest_csv(p)) reproduces the file byte for byte.
/// Throws SchemaError (header mismatch, ragged rows, unparsable numbers),
/// OutOfBoundsError (component beyond the round-trip slack, row reported),
/// EvaluationError (non-finite output at a row).
SampleSet ingest_csv(const std::filesystem::path& path, const InputDomain& d);

/// Write the sample CSV: header then one row per sample, physical
/// coordinates and output, every number in shortest round-trip form.
void persist_csv(const SampleSet& s, const std::filesystem::path& path);

}  // namespace ascheck
