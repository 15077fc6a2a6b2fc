#include "ascheck/domain.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "ascheck/kernels.hpp"
#include "ascheck/numfmt.hpp"

namespace ascheck {

InputDomain::InputDomain(std::vector<double> lower, std::vector<double> upper,
                         std::vector<std::string> names)
    : lower_(std::move(lower)), upper_(std::move(upper)), names_(std::move(names)) {
    const std::size_t m = lower_.size();
    if (m == 0) throw BoundsError("domain needs at least one parameter");
    if (upper_.size() != m)
        throw BoundsError("lower/upper bound vectors have different lengths");
    if (!names_.empty() && names_.size() != m)
        throw BoundsError("name list length does not match parameter count");
    for (std::size_t i = 0; i < m; ++i) {
        if (!std::isfinite(lower_[i]) || !std::isfinite(upper_[i]))
            throw BoundsError("non-finite bound for parameter " + parameter_name(i));
        if (!(lower_[i] < upper_[i]))
            throw BoundsError("parameter " + parameter_name(i) +
                              " needs lower < upper (got [" + numfmt::shortest(lower_[i]) +
                              ", " + numfmt::shortest(upper_[i]) + "])");
    }
    if (!names_.empty()) {
        std::unordered_set<std::string> seen;
        for (const auto& n : names_) {
            if (n.empty()) throw BoundsError("empty parameter name");
            if (!seen.insert(n).second)
                throw BoundsError("duplicate parameter name: " + n);
        }
    }
}

std::string InputDomain::parameter_name(std::size_t i) const {
    if (i < names_.size()) return names_[i];
    return "x" + std::to_string(i + 1);
}

double InputDomain::bounds_slack(std::size_t i) const {
    return 1e-9 * std::max(std::abs(lower_[i]), std::abs(upper_[i]));
}

PhysicalPoint InputDomain::to_physical(const NormalizedPoint& xhat) const {
    const std::size_t m = dimension();
    if (xhat.coords.size() != m)
        throw DimensionError("normalized point has " + std::to_string(xhat.coords.size()) +
                             " components, domain has " + std::to_string(m));
    PhysicalPoint x;
    x.coords.resize(m);
    for (std::size_t i = 0; i < m; ++i)
        to_physical_column(i, std::span<const double>(&xhat.coords[i], 1),
                           std::span<double>(&x.coords[i], 1));
    return x;
}

void InputDomain::to_physical_column(std::size_t i, std::span<const double> xhat,
                                     std::span<double> out) const {
    kernels::scale_to_bounds(xhat, lower_[i], upper_[i], out);
}

NormalizedPoint InputDomain::to_normalized(const PhysicalPoint& x) const {
    const std::size_t m = dimension();
    if (x.coords.size() != m)
        throw DimensionError("physical point has " + std::to_string(x.coords.size()) +
                             " components, domain has " + std::to_string(m));
    NormalizedPoint xhat;
    xhat.coords.resize(m);
    for (std::size_t i = 0; i < m; ++i)
        to_normalized_column(i, std::span<const double>(&x.coords[i], 1),
                             std::span<double>(&xhat.coords[i], 1));
    return xhat;
}

void InputDomain::to_normalized_column(std::size_t i, std::span<const double> x,
                                       std::span<double> out) const {
    const double lo = lower_[i];
    const double hi = upper_[i];
    const double slack = bounds_slack(i);
    const double width = hi - lo;
    const std::size_t n = std::min(x.size(), out.size());
    for (std::size_t j = 0; j < n; ++j) {
        const double v = x[j];
        if (!(v >= lo - slack && v <= hi + slack))
            throw OutOfBoundsError("component " + parameter_name(i) + " = " +
                                       numfmt::shortest(v) + " outside [" +
                                       numfmt::shortest(lo) + ", " + numfmt::shortest(hi) + "]",
                                   j);
        const double clamped = std::clamp(v, lo, hi);
        // ((x-lo) - (hi-x)) / (hi-lo): at x == lo the numerator is exactly
        // -(hi-lo), at x == hi exactly +(hi-lo), so the bounds map to
        // exactly -1/+1 even when the range is narrow and far from zero.
        out[j] = std::clamp(((clamped - lo) - (hi - clamped)) / width, -1.0, 1.0);
    }
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

}  // namespace

InputDomain load_bounds_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open bounds file: " + path.string());

    std::vector<std::string> names;
    std::vector<double> lower, upper;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        const auto toks = split_ws(line);
        if (toks.size() != 3)
            throw SchemaError(path.string() + ":" + std::to_string(lineno) +
                              ": expected `name lower upper`, got " +
                              std::to_string(toks.size()) + " fields");
        double lo, hi;
        if (!numfmt::try_parse(toks[1], lo) || !numfmt::try_parse(toks[2], hi))
            throw SchemaError(path.string() + ":" + std::to_string(lineno) +
                              ": cannot parse bounds for parameter " + toks[0]);
        names.push_back(toks[0]);
        lower.push_back(lo);
        upper.push_back(hi);
    }
    if (names.empty()) throw SchemaError(path.string() + ": no parameters defined");
    return InputDomain(std::move(lower), std::move(upper), std::move(names));
}

void save_bounds_file(const InputDomain& d, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write bounds file: " + path.string());
    out << "# name lower upper\n";
    for (std::size_t i = 0; i < d.dimension(); ++i) {
        out << d.parameter_name(i) << ' ' << numfmt::digits17(d.lower()[i]) << ' '
            << numfmt::digits17(d.upper()[i]) << '\n';
    }
    if (!out.flush()) throw IoError("failed writing bounds file: " + path.string());
}

}  // namespace ascheck
