#include "ascheck/testfns.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <random>

#include "ascheck/errors.hpp"
#include "ascheck/numfmt.hpp"

namespace ascheck {

namespace {

constexpr std::uint64_t kSeedSalt = 0x9e3779b97f4a7c15ull;
constexpr double kInv53 = 1.0 / 9007199254740992.0;  // 2^-53

// Unit coefficient vector drawn from the run seed: random signs, magnitudes
// uniform in [1, 2) before normalization, from a salted mt19937_64 stream.
// The magnitude floor keeps every component genuinely active -- a
// coefficient near zero would reduce its corner pick and importance rank to
// a coin flip on noise. Deterministic for a given (m, seed) on every
// platform.
std::vector<double> draw_unit_coeffs(std::size_t m, std::uint64_t seed) {
    std::mt19937_64 engine(seed ^ kSeedSalt);
    std::vector<double> c(m);
    for (double& v : c) {
        const std::uint64_t bits = engine();
        const double mag = 1.0 + static_cast<double>(bits >> 11) * kInv53;  // [1, 2)
        v = (bits & 1) ? mag : -mag;
    }
    double ss = 0.0;
    for (const double v : c) ss += v * v;
    const double norm = std::sqrt(ss);
    for (double& v : c) v /= norm;
    return c;
}

InputDomain unit_cube(std::size_t m) {
    return InputDomain(std::vector<double>(m, -1.0), std::vector<double>(m, 1.0));
}

// cʹx as a plain left-to-right loop; the exported Python script mirrors this
// op sequence so both produce the same double.
double plain_dot(const std::vector<double>& c, std::span<const double> x) {
    double s = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) s += c[i] * x[i];
    return s;
}

struct ParsedName {
    std::string base;
    std::size_t m;
    bool suffixed;
};

std::optional<ParsedName> parse_name(const std::string& name) {
    const std::vector<std::string> bases = {"exp2", "constant", "linear", "ridge-exp",
                                            "quartic-bowl"};
    for (const auto& base : bases) {
        if (name == base) return ParsedName{base, 2, false};
        if (name.size() > base.size() + 1 && name.compare(0, base.size(), base) == 0 &&
            name[base.size()] == '-') {
            const std::string suffix = name.substr(base.size() + 1);
            if (suffix.find_first_not_of("0123456789") != std::string::npos) continue;
            const unsigned long m = std::strtoul(suffix.c_str(), nullptr, 10);
            if (m < 1 || m > 1000) return std::nullopt;
            return ParsedName{base, static_cast<std::size_t>(m), true};
        }
    }
    return std::nullopt;
}

[[noreturn]] void unknown_name(const std::string& name) {
    std::string msg = "unknown test function `" + name + "`; available:";
    for (const auto& n : builtin_names()) msg += " " + n;
    throw Error(msg);
}

}  // namespace

std::vector<std::string> builtin_names() {
    return {"exp2", "constant[-m]", "linear[-m]", "ridge-exp[-m]", "quartic-bowl[-m]"};
}

AnalyticModel builtin(const std::string& name, std::uint64_t seed) {
    const auto parsed = parse_name(name);
    if (!parsed) unknown_name(name);
    const auto& [base, m, suffixed] = *parsed;

    AnalyticModel model{name, AnalyticModel::Family::constant, unit_cube(m),
                        ModelFn{}, std::nullopt, std::nullopt};

    if (base == "exp2") {
        if (suffixed) unknown_name(name);  // exp2 is fixed at two parameters
        model.family = AnalyticModel::Family::monotone;
        model.evaluate = [](std::span<const double> x) { return std::exp(x[0] + x[1]); };
        const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
        model.known_direction = std::vector<double>{inv_sqrt2, inv_sqrt2};
        return model;
    }
    if (base == "constant") {
        model.family = AnalyticModel::Family::constant;
        model.evaluate = [](std::span<const double>) { return 5.0; };
        return model;
    }

    std::vector<double> c = draw_unit_coeffs(m, seed);
    model.ridge_coefficients = c;
    if (base == "linear") {
        model.family = AnalyticModel::Family::linear;
        model.evaluate = [c](std::span<const double> x) { return plain_dot(c, x); };
        model.known_direction = c;
    } else if (base == "ridge-exp") {
        model.family = AnalyticModel::Family::monotone;
        model.evaluate = [c](std::span<const double> x) { return std::exp(plain_dot(c, x)); };
        model.known_direction = c;
    } else {
        model.family = AnalyticModel::Family::even;
        model.evaluate = [c](std::span<const double> x) {
            const double s = plain_dot(c, x);
            return s * s;
        };
        model.known_direction = c;  // the ridge the linear check cannot see
    }
    return model;
}

namespace {

std::string python_body(const AnalyticModel& model) {
    std::string body;
    if (model.ridge_coefficients) {
        body += "c = [";
        const auto& c = *model.ridge_coefficients;
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i != 0) body += ", ";
            body += numfmt::digits17(c[i]);
        }
        body += "]\n";
        body += "s = 0.0\n";
        body += "for ci, xi in zip(c, xs):\n";
        body += "    s = s + ci * xi\n";
    }
    if (model.name == "exp2") {
        body += "f = math.exp(xs[0] + xs[1])\n";
    } else if (model.family == AnalyticModel::Family::constant) {
        body += "f = 5.0\n";
    } else if (model.family == AnalyticModel::Family::linear) {
        body += "f = s\n";
    } else if (model.family == AnalyticModel::Family::monotone) {
        body += "f = math.exp(s)\n";
    } else {
        body += "f = s * s\n";
    }
    return body;
}

}  // namespace

std::filesystem::path export_script(const AnalyticModel& model,
                                    const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    const auto script_path = dir / (model.name + ".py");
    {
        std::ofstream out(script_path, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write " + script_path.string());
        out << "#!/usr/bin/env python3\n";
        out << "# " << model.name << ": reads one line of " << model.dimension()
            << " coordinates on stdin, prints the scalar output.\n";
        out << "import math\n";
        out << "import sys\n\n";
        out << "xs = [float(t) for t in sys.stdin.readline().split()]\n";
        out << "if len(xs) != " << model.dimension() << ":\n";
        out << "    sys.stderr.write('expected " << model.dimension() << " coordinates\\n')\n";
        out << "    sys.exit(64)\n";
        out << python_body(model);
        out << "print(repr(f))\n";
        if (!out.flush()) throw IoError("failed writing " + script_path.string());
    }
    std::filesystem::permissions(script_path,
                                 std::filesystem::perms::owner_all |
                                     std::filesystem::perms::group_read |
                                     std::filesystem::perms::group_exec |
                                     std::filesystem::perms::others_read |
                                     std::filesystem::perms::others_exec,
                                 std::filesystem::perm_options::replace);
    save_bounds_file(model.domain, dir / (model.name + ".bounds"));
    return script_path;
}

}  // namespace ascheck
