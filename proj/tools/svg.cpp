#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace alleedyn::cli {

namespace {

constexpr double kWidth = 720, kHeight = 420;
constexpr double kLeft = 60, kRight = 20, kTop = 20, kBottom = 45;

std::string fmt(double v) {
    std::ostringstream o;
    o.precision(6);
    o << v;
    return o.str();
}

}  // namespace

std::string trajectory_svg(const Trajectory& t) {
    const double t0 = t.times.empty() ? 0.0 : t.times.front();
    const double t1 = t.times.empty() ? 1.0 : t.times.back();
    double vmax = 0.0;
    for (const State& s : t.states)
        vmax = std::max({vmax, s.x, s.y1, s.y2});
    if (vmax <= 0.0) vmax = 1.0;
    const double tspan = (t1 > t0) ? t1 - t0 : 1.0;

    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    auto px = [&](double tv) { return kLeft + (tv - t0) / tspan * plot_w; };
    auto py = [&](double v) { return kTop + (1.0 - v / vmax) * plot_h; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
        << kHeight << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // axes
    svg << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft
        << "\" y2=\"" << kTop + plot_h << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + plot_h << "\" x2=\""
        << kLeft + plot_w << "\" y2=\"" << kTop + plot_h << "\" stroke=\"black\"/>\n";

    // ticks
    for (int i = 0; i <= 4; ++i) {
        const double tv = t0 + tspan * i / 4.0;
        const double v = vmax * i / 4.0;
        svg << "<text x=\"" << px(tv) << "\" y=\"" << kTop + plot_h + 18
            << "\" font-size=\"11\" text-anchor=\"middle\">" << fmt(tv) << "</text>\n";
        svg << "<text x=\"" << kLeft - 6 << "\" y=\"" << py(v) + 4
            << "\" font-size=\"11\" text-anchor=\"end\">" << fmt(v) << "</text>\n";
    }
    svg << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 8
        << "\" font-size=\"12\" text-anchor=\"middle\">t</text>\n";

    const char* colors[3] = {"#1f77b4", "#d62728", "#2ca02c"};
    const char* names[3] = {"x", "y1", "y2"};
    for (int c = 0; c < 3; ++c) {
        svg << "<polyline fill=\"none\" stroke=\"" << colors[c]
            << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < t.times.size(); ++i) {
            const State& s = t.states[i];
            const double v = c == 0 ? s.x : (c == 1 ? s.y1 : s.y2);
            svg << fmt(px(t.times[i])) << "," << fmt(py(v)) << " ";
        }
        svg << "\"/>\n";
        // legend entry
        const double ly = kTop + 14 + 16 * c;
        svg << "<line x1=\"" << kLeft + plot_w - 70 << "\" y1=\"" << ly
            << "\" x2=\"" << kLeft + plot_w - 50 << "\" y2=\"" << ly
            << "\" stroke=\"" << colors[c] << "\" stroke-width=\"2\"/>\n";
        svg << "<text x=\"" << kLeft + plot_w - 44 << "\" y=\"" << ly + 4
            << "\" font-size=\"12\">" << names[c] << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace alleedyn::cli
