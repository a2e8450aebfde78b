#include "svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace {

struct Panel {
    double x0, y0, w, h;        // viewport
    double lo_x, hi_x, lo_y, hi_y;  // data range (already in plot space)

    double px(double x) const { return x0 + (x - lo_x) / (hi_x - lo_x) * w; }
    double py(double y) const { return y0 + h - (y - lo_y) / (hi_y - lo_y) * h; }
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

void polyline(std::ostringstream& os, const std::vector<std::pair<double, double>>& pts,
              const char* color, bool dashed = false) {
    if (pts.size() < 2) return;
    os << "<polyline fill=\"none\" stroke=\"" << color << "\"";
    if (dashed) os << " stroke-dasharray=\"6,4\"";
    os << " stroke-width=\"1.5\" points=\"";
    for (const auto& [x, y] : pts) os << num(x) << ',' << num(y) << ' ';
    os << "\"/>\n";
}

void dots(std::ostringstream& os, const std::vector<std::pair<double, double>>& pts,
          const char* color) {
    for (const auto& [x, y] : pts)
        os << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"3\" fill=\"" << color
           << "\"/>\n";
}

void frame(std::ostringstream& os, const Panel& p, const std::string& title) {
    os << "<rect x=\"" << num(p.x0) << "\" y=\"" << num(p.y0) << "\" width=\"" << num(p.w)
       << "\" height=\"" << num(p.h) << "\" fill=\"none\" stroke=\"#444\"/>\n";
    os << "<text x=\"" << num(p.x0 + p.w / 2) << "\" y=\"" << num(p.y0 - 8)
       << "\" text-anchor=\"middle\" font-size=\"13\">" << title << "</text>\n";
}

}  // namespace

std::string render_sweep_svg(const std::vector<SweepPlotRow>& rows) {
    std::vector<std::pair<double, double>> def_pts;  // (log10 eps, log10 deficit)
    std::vector<std::pair<double, double>> hd_pts, l1_pts;
    for (const SweepPlotRow& r : rows) {
        if (r.eps > 0.0 && r.deficit > 0.0)
            def_pts.push_back({std::log10(r.eps), std::log10(r.deficit)});
        if (r.eps > 0.0 && r.ratio_hd) hd_pts.push_back({std::log10(r.eps), *r.ratio_hd});
        if (r.eps > 0.0 && r.ratio_l1) l1_pts.push_back({std::log10(r.eps), *r.ratio_l1});
    }
    if (def_pts.empty()) throw std::runtime_error("no plottable rows in the sweep CSV");
    std::sort(def_pts.begin(), def_pts.end());
    std::sort(hd_pts.begin(), hd_pts.end());
    std::sort(l1_pts.begin(), l1_pts.end());

    auto span = [](const std::vector<std::pair<double, double>>& pts, bool second) {
        double lo = 1e300, hi = -1e300;
        for (const auto& [a, b] : pts) {
            const double v = second ? b : a;
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        if (hi - lo < 1e-12) {
            lo -= 0.5;
            hi += 0.5;
        }
        const double pad = 0.08 * (hi - lo);
        return std::pair{lo - pad, hi + pad};
    };

    Panel left{70, 50, 380, 320, 0, 0, 0, 0};
    std::tie(left.lo_x, left.hi_x) = span(def_pts, false);
    std::tie(left.lo_y, left.hi_y) = span(def_pts, true);

    std::vector<std::pair<double, double>> ratio_all = hd_pts;
    ratio_all.insert(ratio_all.end(), l1_pts.begin(), l1_pts.end());
    Panel right{560, 50, 380, 320, 0, 0, 0, 0};
    if (!ratio_all.empty()) {
        std::tie(right.lo_x, right.hi_x) = span(ratio_all, false);
        std::tie(right.lo_y, right.hi_y) = span(ratio_all, true);
        right.lo_y = std::min(right.lo_y, 0.0);
    }

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1010\" height=\"430\" "
          "font-family=\"sans-serif\">\n";
    frame(os, left, "deficit vs eps (log-log), dashed: slope 2");

    auto to_view = [](const Panel& p, const std::vector<std::pair<double, double>>& pts) {
        std::vector<std::pair<double, double>> out;
        for (const auto& [x, y] : pts) out.push_back({p.px(x), p.py(y)});
        return out;
    };
    polyline(os, to_view(left, def_pts), "#1f77b4");
    dots(os, to_view(left, def_pts), "#1f77b4");

    // slope-2 reference through the finest point
    const auto& anchor = def_pts.front();
    std::vector<std::pair<double, double>> ref{
        {anchor.first, anchor.second},
        {def_pts.back().first, anchor.second + 2.0 * (def_pts.back().first - anchor.first)}};
    polyline(os, to_view(left, ref), "#888", true);

    // axis labels: eps ticks on both panels
    for (const auto& [lx, ly] : def_pts) {
        os << "<text x=\"" << num(left.px(lx)) << "\" y=\"" << num(left.y0 + left.h + 16)
           << "\" text-anchor=\"middle\" font-size=\"11\">" << num(std::pow(10.0, lx))
           << "</text>\n";
        (void)ly;
    }
    for (double f : {0.0, 0.5, 1.0}) {
        const double y = left.lo_y + f * (left.hi_y - left.lo_y);
        os << "<text x=\"" << num(left.x0 - 6) << "\" y=\"" << num(left.py(y) + 4)
           << "\" text-anchor=\"end\" font-size=\"11\">" << num(std::pow(10.0, y)) << "</text>\n";
    }

    if (!ratio_all.empty()) {
        frame(os, right, "ratio panels: hd^2/deficit (blue), l1^2/deficit (orange)");
        polyline(os, to_view(right, hd_pts), "#1f77b4");
        dots(os, to_view(right, hd_pts), "#1f77b4");
        polyline(os, to_view(right, l1_pts), "#ff7f0e");
        dots(os, to_view(right, l1_pts), "#ff7f0e");
        for (const auto& [lx, ly] : ratio_all) {
            os << "<text x=\"" << num(right.px(lx)) << "\" y=\"" << num(right.y0 + right.h + 16)
               << "\" text-anchor=\"middle\" font-size=\"11\">" << num(std::pow(10.0, lx))
               << "</text>\n";
            (void)ly;
        }
        for (double f : {0.0, 0.5, 1.0}) {
            const double y = right.lo_y + f * (right.hi_y - right.lo_y);
            os << "<text x=\"" << num(right.x0 - 6) << "\" y=\"" << num(right.py(y) + 4)
               << "\" text-anchor=\"end\" font-size=\"11\">" << num(y) << "</text>\n";
        }
    }

    os << "</svg>\n";
    return os.str();
}
