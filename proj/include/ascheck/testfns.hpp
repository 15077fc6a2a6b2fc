#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ascheck/domain.hpp"
#include "ascheck/sampling.hpp"

namespace ascheck {

/// Built-in analytic model with known structure, used for self-tests and
/// demos. All builtins live on [-1,1]^m, where physical and normalized
/// coordinates coincide exactly.
struct AnalyticModel {
    /// Trend shape along the ridge, which decides what the linear check can
    /// recover: `even` is its documented blind spot (w near zero).
    enum class Family { constant, linear, monotone, even };

    std::string name;    ///< canonical registry name, e.g. "ridge-exp-7"
    Family family;
    InputDomain domain;
    ModelFn evaluate;    ///< pure; safe for concurrent use

    /// True ridge direction when one exists; unit norm to 1e-12.
    std::optional<std::vector<double>> known_direction;
    /// Seed-generated unit coefficient vector c for the parametric families.
    std::optional<std::vector<double>> ridge_coefficients;

    std::size_t dimension() const { return domain.dimension(); }
};

/// Look up a builtin by name. Registered families (default m = 2, or append
/// "-<m>" for another dimension):
///   exp2              exp(x1 + x2) on [-1,1]^2, direction (1,1)/sqrt(2)
///   constant[-m]      5 everywhere (zero-gradient case)
///   linear[-m]        c'x (exact recovery target)
///   ridge-exp[-m]     exp(c'x) (monotone ridge)
///   quartic-bowl[-m]  (c'x)^2 (even ridge, the check's blind spot)
/// c is drawn from `seed`, normalized to unit length, and reported in the
/// model, so every self-test reproduces from the seed alone.
/// Throws Error for an unknown name.
AnalyticModel builtin(const std::string& name, std::uint64_t seed = 0);

/// Registry names for help text, with "-<m>" placeholders.
std::vector<std::string> builtin_names();

/// Write `<name>.py` (executable, speaking the subprocess protocol: one line
/// of coordinates on stdin, the scalar on stdout) and `<name>.bounds` into
/// `dir`, embedding the model's exact coefficients. Returns the script path.
std::filesystem::path export_script(const AnalyticModel& model,
                                    const std::filesystem::path& dir);

}  // namespace ascheck
