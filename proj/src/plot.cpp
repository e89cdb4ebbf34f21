#include "varmech/plot.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "varmech/format.hpp"

namespace varmech {

namespace {

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

}  // namespace

std::string render_geodesics_svg(std::span<const GeodesicParams> family,
                                 double t_min, double t_max,
                                 std::size_t samples_per_curve) {
    if (family.empty())
        throw SizeError("render_geodesics_svg: need at least one geodesic");
    if (!(t_max > t_min) || !std::isfinite(t_min) || !std::isfinite(t_max))
        throw std::invalid_argument("render_geodesics_svg: need t_min < t_max");
    samples_per_curve = std::max<std::size_t>(samples_per_curve, 200);

    std::vector<std::vector<std::pair<double, double>>> curves;
    curves.reserve(family.size());
    for (const GeodesicParams& gp : family) {
        require_valid_params(gp);
        std::vector<std::pair<double, double>> pts;
        pts.reserve(samples_per_curve);
        for (std::size_t i = 0; i < samples_per_curve; ++i) {
            const double t = t_min + (t_max - t_min) * static_cast<double>(i) /
                                         static_cast<double>(samples_per_curve - 1);
            if (gp.energy == 0.0)
                pts.emplace_back(gp.x0, gp.y0);
            else if (gp.momentum == 0.0)
                pts.emplace_back(gp.x0, eval_q2(gp, t));
            else
                pts.emplace_back(eval_q1(gp, t), eval_q2(gp, t));
        }
        curves.push_back(std::move(pts));
    }

    // Fit the viewport around the data and the q2 = 0 axis.
    double x_lo = curves[0][0].first, x_hi = x_lo;
    double y_hi = curves[0][0].second;
    for (const auto& pts : curves)
        for (const auto& [x, y] : pts) {
            x_lo = std::fmin(x_lo, x);
            x_hi = std::fmax(x_hi, x);
            y_hi = std::fmax(y_hi, y);
        }
    double x_span = x_hi - x_lo;
    double y_span = y_hi;  // the axis y = 0 is always shown
    if (x_span <= 0.0) x_span = std::fmax(y_span, 1.0);
    if (y_span <= 0.0) y_span = std::fmax(x_span, 1.0);
    const double mx = 0.1 * x_span;
    const double my = 0.1 * y_span;
    const double vx = x_lo - mx;
    const double vy = -(y_hi + my);
    const double vw = x_span + 2.0 * mx;
    const double vh = y_span + 2.0 * my;
    const double stroke = 0.008 * std::fmax(vw, vh);

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"";
    svg += fmt_short(vx);
    svg += " ";
    svg += fmt_short(vy);
    svg += " ";
    svg += fmt_short(vw);
    svg += " ";
    svg += fmt_short(vh);
    svg += "\" width=\"840\" height=\"";
    svg += fmt_short(840.0 * vh / vw);
    svg += "\">\n";
    svg += "<line x1=\"" + fmt_short(vx) + "\" y1=\"0\" x2=\"" + fmt_short(vx + vw) +
           "\" y2=\"0\" stroke=\"#333333\" stroke-width=\"" + fmt_short(stroke) +
           "\"/>\n";

    for (std::size_t c = 0; c < curves.size(); ++c) {
        svg += "<polyline fill=\"none\" stroke=\"";
        svg += kPalette[c % (sizeof(kPalette) / sizeof(kPalette[0]))];
        svg += "\" stroke-width=\"" + fmt_short(stroke) + "\" points=\"";
        for (std::size_t i = 0; i < curves[c].size(); ++i) {
            if (i != 0) svg += " ";
            svg += fmt_short(curves[c][i].first);
            svg += ",";
            svg += fmt_short(-curves[c][i].second);  // SVG y points down
        }
        svg += "\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace varmech
