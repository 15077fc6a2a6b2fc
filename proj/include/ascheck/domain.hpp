#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "ascheck/errors.hpp"

namespace ascheck {

/// A point in normalized coordinates, componentwise in [-1, 1].
struct NormalizedPoint {
    std::vector<double> coords;
};

/// A point in physical units, componentwise within its domain's bounds.
struct PhysicalPoint {
    std::vector<double> coords;
};

/// The input parameter space: m parameters with finite bounds lower < upper,
/// and the affine map between the normalized hypercube [-1,1]^m and the
/// physical box [lower, upper].
///
/// Immutable after construction; all operations are pure, so a domain can be
/// shared freely across concurrent model evaluations.
class InputDomain {
public:
    /// Throws BoundsError unless m >= 1, both bound vectors have m finite
    /// entries, lower[i] < upper[i] for every i, and names (when given) are
    /// m non-empty distinct labels.
    InputDomain(std::vector<double> lower, std::vector<double> upper,
                std::vector<std::string> names = {});

    std::size_t dimension() const { return lower_.size(); }
    std::span<const double> lower() const { return lower_; }
    std::span<const double> upper() const { return upper_; }

    /// Labels from the bounds file, or empty when the domain was built
    /// without names.
    const std::vector<std::string>& names() const { return names_; }

    /// names()[i] when labels exist, else the generated label "x<i+1>".
    std::string parameter_name(std::size_t i) const;

    /// Normalized -> physical, componentwise
    ///   x_i = 1/2 [(1 - xhat_i) lower_i + (1 + xhat_i) upper_i],
    /// the affine map written in its endpoint-exact form: xhat_i = +/-1 maps
    /// to exactly upper_i / lower_i, and every result lies in
    /// [lower_i, upper_i]. Throws DimensionError on size mismatch.
    PhysicalPoint to_physical(const NormalizedPoint& xhat) const;

    /// Physical -> normalized, the inverse affine map. Components outside
    /// [lower, upper] by at most `bounds_slack(i)` are clamped (this absorbs
    /// round-trip float noise in ingested files); larger violations throw
    /// OutOfBoundsError.
    NormalizedPoint to_normalized(const PhysicalPoint& x) const;

    /// Column forms of the maps used when converting whole sample matrices;
    /// same semantics per element as the point operations above.
    void to_physical_column(std::size_t i, std::span<const double> xhat,
                            std::span<double> out) const;
    void to_normalized_column(std::size_t i, std::span<const double> x,
                              std::span<double> out) const;

    /// Absolute tolerance for accepting a physical component just outside
    /// its range: 1e-9 * max(|lower_i|, |upper_i|).
    double bounds_slack(std::size_t i) const;

    friend bool operator==(const InputDomain& a, const InputDomain& b) {
        return a.lower_ == b.lower_ && a.upper_ == b.upper_ && a.names_ == b.names_;
    }

private:
    std::vector<double> lower_;
    std::vector<double> upper_;
    std::vector<std::string> names_;
};

/// Read a bounds file: one parameter per line, `name lower upper` separated
/// by whitespace; lines whose first non-blank character is '#' are comments.
/// Line order defines coordinate order everywhere downstream.
/// Throws IoError / SchemaError / BoundsError.
InputDomain load_bounds_file(const std::filesystem::path& path);

/// Write a bounds file in the same format, bounds at 17 significant digits.
void save_bounds_file(const InputDomain& d, const std::filesystem::path& path);

}  // namespace ascheck
