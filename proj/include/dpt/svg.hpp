#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "dpt/direction.hpp"

namespace dpt {

namespace detail {

inline std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

struct SvgCanvas {
    static constexpr double kSide = 400.0;
    static constexpr double kMargin = 40.0;
    std::string body;

    // Unit-square coordinates, v axis pointing up.
    static double px(double u) { return kMargin + kSide * u; }
    static double py(double v) { return kMargin + kSide * (1.0 - v); }

    void line(double u0, double v0, double u1, double v1, const std::string& color) {
        body += "  <line x1=\"" + fmt(px(u0)) + "\" y1=\"" + fmt(py(v0)) + "\" x2=\"" +
                fmt(px(u1)) + "\" y2=\"" + fmt(py(v1)) + "\" stroke=\"" + color +
                "\" stroke-width=\"2\"/>\n";
    }
    void circle(double u, double v, double r, const std::string& color) {
        body += "  <circle cx=\"" + fmt(px(u)) + "\" cy=\"" + fmt(py(v)) + "\" r=\"" +
                fmt(kSide * r) + "\" stroke=\"" + color + "\" stroke-width=\"2\" fill=\"none\"/>\n";
    }
    void text(double x, double y, const std::string& s) {
        body += "  <text x=\"" + fmt(x) + "\" y=\"" + fmt(y) +
                "\" font-family=\"monospace\" font-size=\"13\">" + s + "</text>\n";
    }
};

inline const char* axis_color(std::size_t i) {
    static const char* colors[] = {"#c0392b", "#2980b9", "#27ae60", "#8e44ad",
                                   "#d35400", "#16a085", "#7f8c8d"};
    return colors[i % 7];
}

/// Straight (a,b)-slope line through (0, phase) on the unit flat torus,
/// drawn as its wrapped segments.
inline void torus_line(SvgCanvas& canvas, std::int64_t a, std::int64_t b, double phase,
                       const std::string& color) {
    if (a == 0 && b == 0) return;
    const double fa = static_cast<double>(a);
    const double fb = static_cast<double>(b);
    std::vector<double> cuts{0.0, 1.0};
    auto add_cuts = [&cuts](double speed, double offset) {
        if (speed == 0.0) return;
        const double lo = std::min(offset, offset + speed);
        const double hi = std::max(offset, offset + speed);
        for (std::int64_t i = static_cast<std::int64_t>(std::floor(lo)) - 1;
             i <= static_cast<std::int64_t>(std::ceil(hi)) + 1; ++i) {
            const double t = (static_cast<double>(i) - offset) / speed;
            if (t > 1e-9 && t < 1.0 - 1e-9) cuts.push_back(t);
        }
    };
    add_cuts(fa, 0.0);
    add_cuts(fb, phase);
    std::sort(cuts.begin(), cuts.end());
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double t0 = cuts[i], t1 = cuts[i + 1];
        if (t1 - t0 < 1e-9) continue;
        const double tm = 0.5 * (t0 + t1);
        const double cu = std::floor(fa * tm);
        const double cv = std::floor(fb * tm + phase);
        canvas.line(fa * t0 - cu, fb * t0 + phase - cv, fa * t1 - cu, fb * t1 + phase - cv, color);
    }
}

} // namespace detail

/// Renders an axis-motif on the unit flat torus: (a,b) directions as
/// straight lines of slope b/a wrapped once per contributing element,
/// trivial knots as small circles, non-contractible loops as circles
/// crossing the square's boundary.
inline std::string axis_svg(const AxisMotif& axis, const std::string& title) {
    detail::SvgCanvas canvas;
    canvas.body += "  <rect x=\"" + detail::fmt(detail::SvgCanvas::kMargin) + "\" y=\"" +
                   detail::fmt(detail::SvgCanvas::kMargin) + "\" width=\"400\" height=\"400\" " +
                   "fill=\"none\" stroke=\"#222222\" stroke-width=\"1.5\"/>\n";

    std::vector<std::string> legend;
    for (std::size_t i = 0; i < axis.torus_links.size(); ++i) {
        const auto& tl = axis.torus_links[i];
        const std::string color = detail::axis_color(i);
        for (int k = 0; k < tl.multiplicity; ++k)
            detail::torus_line(canvas, tl.direction.du, tl.direction.dv,
                               (k + 0.5) / tl.multiplicity, color);
        const WrapVector total{tl.multiplicity * tl.direction.du,
                               tl.multiplicity * tl.direction.dv};
        legend.push_back(to_string(total) + "-torus " + (tl.multiplicity > 1 ? "link" : "knot"));
    }
    for (int i = 0; i < axis.trivial_knots; ++i)
        canvas.circle(0.12 + 0.11 * (i % 7), 0.10 + 0.11 * (i / 7), 0.035, "#333333");
    if (axis.trivial_knots > 0)
        legend.push_back(std::to_string(axis.trivial_knots) + " trivial knot" +
                         (axis.trivial_knots > 1 ? "s" : ""));
    for (std::size_t i = 0; i < axis.noncontractible_loops.size(); ++i) {
        const double v = 0.85 - 0.09 * static_cast<double>(i % 9);
        canvas.circle(0.0, v, 0.05, "#555555");
        canvas.circle(1.0, v, 0.05, "#555555");
    }
    if (!axis.noncontractible_loops.empty())
        legend.push_back(std::to_string(axis.noncontractible_loops.size()) +
                         " non-contractible loop" +
                         (axis.noncontractible_loops.size() > 1 ? "s" : ""));

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"480\" height=\"" +
           std::to_string(520 + 16 * legend.size()) + "\" viewBox=\"0 0 480 " +
           std::to_string(520 + 16 * legend.size()) + "\">\n";
    canvas.text(40, 26, "axis-motif: " + title);
    for (std::size_t i = 0; i < legend.size(); ++i)
        canvas.text(40, 462 + 16 * static_cast<double>(i), legend[i]);
    out += canvas.body;
    out += "</svg>\n";
    return out;
}

} // namespace dpt
