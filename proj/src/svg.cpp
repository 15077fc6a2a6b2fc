#include "ascheck/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <span>
#include <string>
#include <vector>

#include "ascheck/errors.hpp"

namespace ascheck {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 64.0;
constexpr double kRight = 24.0;
constexpr double kTop = 24.0;
constexpr double kBottom = 56.0;

struct Range {
    double lo;
    double hi;
};

Range padded_range(std::span<const double> v) {
    const auto [mn, mx] = std::minmax_element(v.begin(), v.end());
    if (!(*mx > *mn)) return {*mn - 1.0, *mx + 1.0};
    const double pad = 0.05 * (*mx - *mn);
    return {*mn - pad, *mx + pad};
}

// Tick step of the form {1,2,5} * 10^k sized for about five intervals.
double nice_step(double span) {
    const double raw = span / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double r = raw / mag;
    const double base = r < 1.5 ? 1.0 : r < 3.5 ? 2.0 : r < 7.5 ? 5.0 : 10.0;
    return base * mag;
}

std::vector<double> ticks(const Range& rg) {
    const double step = nice_step(rg.hi - rg.lo);
    const double k0 = std::ceil(rg.lo / step - 1e-9);
    const double k1 = std::floor(rg.hi / step + 1e-9);
    std::vector<double> out;
    for (double k = k0; k <= k1; k += 1.0) out.push_back(k * step);
    return out;
}

std::string fixed2(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string tick_label(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v == 0.0 ? 0.0 : v);  // fold -0
    return buf;
}

}  // namespace

void emit_scatter_svg(const SummaryScatter& sc, const std::filesystem::path& path) {
    if (sc.y.empty()) throw DimensionError("cannot plot an empty scatter");

    const Range xr = padded_range(sc.y);
    const Range yr = padded_range(sc.f);
    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    const auto px = [&](double v) { return kLeft + (v - xr.lo) / (xr.hi - xr.lo) * plot_w; };
    const auto py = [&](double v) { return kTop + (yr.hi - v) / (yr.hi - yr.lo) * plot_h; };

    std::string s;
    s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\" "
         "viewBox=\"0 0 640 480\" font-family=\"sans-serif\" font-size=\"13\">\n";
    s += "<rect x=\"0\" y=\"0\" width=\"640\" height=\"480\" fill=\"white\"/>\n";
    s += "<rect x=\"" + fixed2(kLeft) + "\" y=\"" + fixed2(kTop) + "\" width=\"" +
         fixed2(plot_w) + "\" height=\"" + fixed2(plot_h) +
         "\" fill=\"none\" stroke=\"#444444\"/>\n";

    for (const double t : ticks(xr)) {
        const std::string x = fixed2(px(t));
        s += "<line x1=\"" + x + "\" y1=\"" + fixed2(kTop + plot_h) + "\" x2=\"" + x +
             "\" y2=\"" + fixed2(kTop + plot_h + 5.0) + "\" stroke=\"#444444\"/>\n";
        s += "<text x=\"" + x + "\" y=\"" + fixed2(kTop + plot_h + 20.0) +
             "\" text-anchor=\"middle\">" + tick_label(t) + "</text>\n";
    }
    for (const double t : ticks(yr)) {
        const std::string y = fixed2(py(t));
        s += "<line x1=\"" + fixed2(kLeft - 5.0) + "\" y1=\"" + y + "\" x2=\"" + fixed2(kLeft) +
             "\" y2=\"" + y + "\" stroke=\"#444444\"/>\n";
        s += "<text x=\"" + fixed2(kLeft - 9.0) + "\" y=\"" + fixed2(py(t) + 4.0) +
             "\" text-anchor=\"end\">" + tick_label(t) + "</text>\n";
    }

    s += "<text x=\"" + fixed2(kLeft + plot_w / 2.0) + "\" y=\"" + fixed2(kHeight - 14.0) +
         "\" text-anchor=\"middle\">w'x</text>\n";
    s += "<text x=\"16\" y=\"" + fixed2(kTop + plot_h / 2.0) +
         "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " + fixed2(kTop + plot_h / 2.0) +
         ")\">f</text>\n";

    for (std::size_t j = 0; j < sc.y.size(); ++j) {
        s += "<circle cx=\"" + fixed2(px(sc.y[j])) + "\" cy=\"" + fixed2(py(sc.f[j])) +
             "\" r=\"3.5\" fill=\"#1f6fb2\" fill-opacity=\"0.75\"/>\n";
    }
    s += "</svg>\n";

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    out.write(s.data(), static_cast<std::streamsize>(s.size()));
    if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace ascheck
