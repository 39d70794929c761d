#include "svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace patternforge {

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#17becf", "#8c564b", "#e377c2"};

}  // namespace

std::string render_svg(const Representation& rep, const Rational& scale) {
    double s = scale.to_double();
    int n = rep.size();

    std::vector<Polyline> outlines;
    for (int v = 0; v < n; ++v) {
        switch (rep.kind) {
            case RepKind::TouchingLShapes:
                outlines.push_back(lshape_polyline(rep.lshapes[static_cast<std::size_t>(v)]));
                break;
            case RepKind::TouchingRectangles: {
                const DiagonalRectangle& r = rep.rectangles[static_cast<std::size_t>(v)];
                outlines.push_back({r.ground, r.left_corner, r.top_corner, r.right_corner, r.ground});
                break;
            }
            case RepKind::GroundedStairs:
                outlines.push_back(rep.stairs[static_cast<std::size_t>(v)].points);
                break;
            case RepKind::IntervalFilaments:
                outlines.push_back(rep.filaments[static_cast<std::size_t>(v)].points);
                break;
        }
    }

    double min_x = 0, max_x = 1, max_y = 1;
    for (const Polyline& pl : outlines)
        for (const Point& p : pl) {
            min_x = std::min(min_x, p.x.to_double());
            max_x = std::max(max_x, p.x.to_double());
            max_y = std::max(max_y, p.y.to_double());
        }

    const double margin = 30.0;
    double width = (max_x - min_x) * s + 2 * margin;
    double height = max_y * s + 2 * margin + 20.0;
    auto X = [&](double x) { return (x - min_x) * s + margin; };
    auto Y = [&](double y) { return max_y * s - y * s + margin; };  // flip so the line sits at the bottom

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\""
        << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height) << "\">\n";
    svg << "  <line x1=\"" << fmt(X(min_x) - margin / 2) << "\" y1=\"" << fmt(Y(0)) << "\" x2=\""
        << fmt(X(max_x) + margin / 2) << "\" y2=\"" << fmt(Y(0))
        << "\" stroke=\"black\" stroke-width=\"2\"/>\n";

    Ordering order = grounding_order(rep);
    std::vector<int> rank_of(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) rank_of[static_cast<std::size_t>(order.ranks[static_cast<std::size_t>(t)])] = t + 1;

    for (int v = 0; v < n; ++v) {
        const char* color = kPalette[static_cast<std::size_t>(v) % (sizeof kPalette / sizeof *kPalette)];
        const Polyline& pl = outlines[static_cast<std::size_t>(v)];
        bool closed = rep.kind == RepKind::TouchingRectangles;
        svg << "  <" << (closed ? "polygon" : "polyline") << " points=\"";
        std::size_t limit = closed ? pl.size() - 1 : pl.size();
        for (std::size_t i = 0; i < limit; ++i) {
            if (i) svg << " ";
            svg << fmt(X(pl[i].x.to_double())) << "," << fmt(Y(pl[i].y.to_double()));
        }
        svg << "\" fill=\"" << (closed ? std::string(color) + "\" fill-opacity=\"0.35" : std::string("none"))
            << "\" stroke=\"" << color << "\" stroke-width=\"1.5\"/>\n";
        double gx = pl.front().x.to_double();
        svg << "  <text x=\"" << fmt(X(gx)) << "\" y=\"" << fmt(Y(0) + 16.0)
            << "\" font-size=\"12\" text-anchor=\"middle\">" << rank_of[static_cast<std::size_t>(v)]
            << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace patternforge
