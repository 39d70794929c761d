#include "representation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"
#include "named_classes.hpp"
#include "solver.hpp"

namespace patternforge {

std::string rep_kind_name(RepKind kind) {
    switch (kind) {
        case RepKind::TouchingLShapes: return "TouchingLShapes";
        case RepKind::TouchingRectangles: return "TouchingRectangles";
        case RepKind::IntervalFilaments: return "IntervalFilaments";
        case RepKind::GroundedStairs: return "GroundedStairs";
    }
    throw std::logic_error("unreachable");
}

RepKind rep_kind_from_name(const std::string& name) {
    if (name == "TouchingLShapes" || name == "lshapes") return RepKind::TouchingLShapes;
    if (name == "TouchingRectangles" || name == "rectangles") return RepKind::TouchingRectangles;
    if (name == "IntervalFilaments" || name == "filaments") return RepKind::IntervalFilaments;
    if (name == "GroundedStairs" || name == "stairs") return RepKind::GroundedStairs;
    throw std::invalid_argument("unknown representation kind '" + name + "'");
}

int Representation::size() const {
    switch (kind) {
        case RepKind::TouchingLShapes: return static_cast<int>(lshapes.size());
        case RepKind::TouchingRectangles: return static_cast<int>(rectangles.size());
        case RepKind::IntervalFilaments: return static_cast<int>(filaments.size());
        case RepKind::GroundedStairs: return static_cast<int>(stairs.size());
    }
    throw std::logic_error("unreachable");
}

Polyline lshape_polyline(const LShape& s) {
    Polyline pl = {Point{s.x, Rational(0)}, Point{s.x, s.y}};
    if (s.x_right != s.x) pl.push_back(Point{s.x_right, s.y});
    return pl;
}

bool RotatedBox::intersects(const RotatedBox& o) const {
    return rational_max(u_lo, o.u_lo) <= rational_min(u_hi, o.u_hi) &&
           rational_max(w_lo, o.w_lo) <= rational_min(w_hi, o.w_hi);
}

bool RotatedBox::interior_overlaps(const RotatedBox& o) const {
    return rational_max(u_lo, o.u_lo) < rational_min(u_hi, o.u_hi) &&
           rational_max(w_lo, o.w_lo) < rational_min(w_hi, o.w_hi);
}

RotatedBox rectangle_box(const DiagonalRectangle& r) {
    auto u = [](const Point& p) { return p.x + p.y; };
    auto w = [](const Point& p) { return p.x - p.y; };
    return RotatedBox{u(r.ground), u(r.right_corner), w(r.left_corner), w(r.ground)};
}

namespace {

Polyline shape_polyline(const Representation& rep, int v) {
    switch (rep.kind) {
        case RepKind::TouchingLShapes: return lshape_polyline(rep.lshapes[static_cast<std::size_t>(v)]);
        case RepKind::GroundedStairs: return rep.stairs[static_cast<std::size_t>(v)].points;
        case RepKind::IntervalFilaments: return rep.filaments[static_cast<std::size_t>(v)].points;
        case RepKind::TouchingRectangles: throw std::logic_error("rectangles are regions, not polylines");
    }
    throw std::logic_error("unreachable");
}

// First grounding abscissa of each shape.
std::vector<Rational> grounding_abscissas(const Representation& rep) {
    std::vector<Rational> xs;
    int n = rep.size();
    xs.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        switch (rep.kind) {
            case RepKind::TouchingLShapes:
                xs.push_back(rep.lshapes[static_cast<std::size_t>(v)].x);
                break;
            case RepKind::TouchingRectangles:
                xs.push_back(rep.rectangles[static_cast<std::size_t>(v)].ground.x);
                break;
            case RepKind::GroundedStairs:
                xs.push_back(rep.stairs[static_cast<std::size_t>(v)].points.front().x);
                break;
            case RepKind::IntervalFilaments:
                xs.push_back(rep.filaments[static_cast<std::size_t>(v)].points.front().x);
                break;
        }
    }
    return xs;
}

}  // namespace

Graph intersection_graph(const Representation& rep) {
    int n = rep.size();
    std::vector<std::pair<int, int>> edges;
    if (rep.kind == RepKind::TouchingRectangles) {
        std::vector<RotatedBox> boxes;
        for (const auto& r : rep.rectangles) boxes.push_back(rectangle_box(r));
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (boxes[static_cast<std::size_t>(u)].intersects(boxes[static_cast<std::size_t>(v)]))
                    edges.emplace_back(u, v);
    } else {
        std::vector<Polyline> pls;
        for (int v = 0; v < n; ++v) pls.push_back(shape_polyline(rep, v));
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (polylines_intersect(pls[static_cast<std::size_t>(u)], pls[static_cast<std::size_t>(v)]))
                    edges.emplace_back(u, v);
    }
    return Graph(n, edges);
}

std::string Report::to_string() const {
    if (violations.empty()) return "valid";
    std::ostringstream os;
    for (const auto& v : violations) os << v << "\n";
    return os.str();
}

namespace {

void check_shape_invariants(const Representation& rep, Report& report) {
    int n = rep.size();
    for (int v = 0; v < n; ++v) {
        std::string tag = "shape " + std::to_string(v) + ": ";
        switch (rep.kind) {
            case RepKind::TouchingLShapes: {
                const LShape& s = rep.lshapes[static_cast<std::size_t>(v)];
                if (!(s.y > Rational(0))) report.violations.push_back(tag + "height must be positive");
                if (s.x_right < s.x) report.violations.push_back(tag + "horizontal part must extend rightward");
                break;
            }
            case RepKind::TouchingRectangles: {
                const DiagonalRectangle& r = rep.rectangles[static_cast<std::size_t>(v)];
                auto u = [](const Point& p) { return p.x + p.y; };
                auto w = [](const Point& p) { return p.x - p.y; };
                if (r.ground.y != Rational(0)) report.violations.push_back(tag + "ground corner not on the line");
                if (u(r.left_corner) != u(r.ground) || w(r.right_corner) != w(r.ground) ||
                    u(r.top_corner) != u(r.right_corner) || w(r.top_corner) != w(r.left_corner))
                    report.violations.push_back(tag + "corners do not form a diagonal rectangle");
                if (u(r.right_corner) < u(r.ground) || w(r.left_corner) > w(r.ground))
                    report.violations.push_back(tag + "corners ordered against the diagonals");
                if (r.left_corner.y < Rational(0) || r.right_corner.y < Rational(0) ||
                    r.top_corner.y < Rational(0))
                    report.violations.push_back(tag + "rectangle leaves the upper half-plane");
                break;
            }
            case RepKind::GroundedStairs: {
                const Polyline& pl = rep.stairs[static_cast<std::size_t>(v)].points;
                if (pl.size() < 2) { report.violations.push_back(tag + "needs at least one segment"); break; }
                if (pl.front().y != Rational(0)) report.violations.push_back(tag + "must start on the line");
                bool expect_vertical = true;  // stairs rise from the grounding point
                for (std::size_t i = 0; i + 1 < pl.size(); ++i) {
                    const Point& a = pl[i];
                    const Point& b = pl[i + 1];
                    if (a == b) { report.violations.push_back(tag + "zero-length step"); break; }
                    bool vertical = a.x == b.x, horizontal = a.y == b.y;
                    if (!vertical && !horizontal) {
                        report.violations.push_back(tag + "steps must be axis-parallel");
                        break;
                    }
                    if (vertical != expect_vertical) {
                        report.violations.push_back(tag + "steps must alternate vertical/horizontal");
                        break;
                    }
                    if (b.x < a.x || b.y < a.y) {
                        report.violations.push_back(tag + "stairs must rise to the right");
                        break;
                    }
                    expect_vertical = !expect_vertical;
                }
                break;
            }
            case RepKind::IntervalFilaments: {
                const Polyline& pl = rep.filaments[static_cast<std::size_t>(v)].points;
                if (pl.size() < 2) { report.violations.push_back(tag + "needs at least one segment"); break; }
                if (pl.front().y != Rational(0) || pl.back().y != Rational(0))
                    report.violations.push_back(tag + "both endpoints must ground on the line");
                for (std::size_t i = 1; i + 1 < pl.size(); ++i)
                    if (!(pl[i].y > Rational(0))) {
                        report.violations.push_back(tag + "interior points must stay strictly above the line");
                        break;
                    }
                for (const Point& p : pl) {
                    if (p.x < pl.front().x || p.x > pl.back().x) {
                        report.violations.push_back(tag + "grounding points must be abscissa-extremal");
                        break;
                    }
                }
                if (!(pl.front().x < pl.back().x))
                    report.violations.push_back(tag + "the two grounding points must be distinct");
                if (!polyline_is_simple(pl)) report.violations.push_back(tag + "curve must not self-intersect");
                break;
            }
        }
    }
}

void check_grounding_distinctness(const Representation& rep, Report& report) {
    std::set<Rational> seen;
    auto touch = [&](const Rational& x) {
        if (!seen.insert(x).second)
            report.violations.push_back("two shapes touch the grounding line at the same point");
    };
    int n = rep.size();
    for (int v = 0; v < n; ++v) {
        switch (rep.kind) {
            case RepKind::TouchingLShapes: touch(rep.lshapes[static_cast<std::size_t>(v)].x); break;
            case RepKind::TouchingRectangles: touch(rep.rectangles[static_cast<std::size_t>(v)].ground.x); break;
            case RepKind::GroundedStairs: touch(rep.stairs[static_cast<std::size_t>(v)].points.front().x); break;
            case RepKind::IntervalFilaments:
                touch(rep.filaments[static_cast<std::size_t>(v)].points.front().x);
                touch(rep.filaments[static_cast<std::size_t>(v)].points.back().x);
                break;
        }
    }
}

void check_touching_and_multiplicity(const Representation& rep, Report& report) {
    int n = rep.size();
    if (rep.kind == RepKind::TouchingRectangles) {
        // Touching means pairwise-disjoint interiors. Shared corner points may
        // involve several rectangles (a triangle already forces one), so the
        // three-shapes-per-point rule is a curve-kind constraint only.
        std::vector<RotatedBox> boxes;
        for (const auto& r : rep.rectangles) boxes.push_back(rectangle_box(r));
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (boxes[static_cast<std::size_t>(u)].interior_overlaps(boxes[static_cast<std::size_t>(v)]))
                    report.violations.push_back("rectangles " + std::to_string(u) + " and " +
                                                std::to_string(v) + " overlap in their interiors");
        return;
    }

    std::vector<Polyline> pls;
    for (int v = 0; v < n; ++v) pls.push_back(shape_polyline(rep, v));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            PolylineContacts contacts =
                polyline_contacts(pls[static_cast<std::size_t>(u)], pls[static_cast<std::size_t>(v)]);
            if (rep.kind == RepKind::TouchingLShapes) {
                for (const Point& p : contacts.points)
                    if (transversal_crossing_at(pls[static_cast<std::size_t>(u)],
                                                pls[static_cast<std::size_t>(v)], p))
                        report.violations.push_back("shapes " + std::to_string(u) + " and " +
                                                    std::to_string(v) + " cross transversally");
            }
            // No point may lie on a third shape.
            for (int w = 0; w < n; ++w) {
                if (w == u || w == v) continue;
                const Polyline& third = pls[static_cast<std::size_t>(w)];
                for (const Point& p : contacts.points)
                    if (point_on_polyline(p, third))
                        report.violations.push_back("a point lies on three shapes (" + std::to_string(u) +
                                                    "," + std::to_string(v) + "," + std::to_string(w) + ")");
                for (const Segment& s : contacts.overlaps)
                    if (polylines_intersect({s.a, s.b}, third))
                        report.violations.push_back("a point lies on three shapes (" + std::to_string(u) +
                                                    "," + std::to_string(v) + "," + std::to_string(w) + ")");
            }
        }
}

}  // namespace

Report verify_representation(const Representation& rep, const Graph& g) {
    if (rep.size() != g.n())
        throw ShapeCountMismatch("representation has " + std::to_string(rep.size()) + " shapes, graph has " +
                                 std::to_string(g.n()) + " vertices");
    Report report;
    check_shape_invariants(rep, report);
    check_grounding_distinctness(rep, report);
    if (!report.violations.empty()) return report;  // geometry below assumes sane shapes
    Graph realized = intersection_graph(rep);
    if (realized != g) {
        for (int u = 0; u < g.n(); ++u)
            for (int v = u + 1; v < g.n(); ++v) {
                if (realized.adjacent(u, v) && !g.adjacent(u, v))
                    report.violations.push_back("unwanted contact between shapes " + std::to_string(u) +
                                                " and " + std::to_string(v));
                if (!realized.adjacent(u, v) && g.adjacent(u, v))
                    report.violations.push_back("missing contact between shapes " + std::to_string(u) +
                                                " and " + std::to_string(v));
            }
    }
    check_touching_and_multiplicity(rep, report);
    return report;
}

Ordering grounding_order(const Representation& rep) {
    std::vector<Rational> xs = grounding_abscissas(rep);
    std::vector<int> ids(xs.size());
    std::iota(ids.begin(), ids.end(), 0);
    std::stable_sort(ids.begin(), ids.end(), [&](int a, int b) {
        return xs[static_cast<std::size_t>(a)] < xs[static_cast<std::size_t>(b)];
    });
    return Ordering{ids};
}

PatternSet grounding_pattern_set(RepKind kind) {
    PatternSet ps;
    switch (kind) {
        case RepKind::TouchingLShapes:
            ps.name = "forest-grounding-order";
            ps.patterns.push_back(forest_grounding_pattern());
            break;
        case RepKind::TouchingRectangles:
            ps.name = "empty";
            ps.patterns.push_back(make_ps(""));
            break;
        case RepKind::IntervalFilaments:
            ps.name = "ab";
            ps.patterns.push_back(make_ps("ab"));
            break;
        case RepKind::GroundedStairs:
            ps.name = "abc";
            ps.patterns.push_back(make_ps("abc"));
            break;
    }
    return ps;
}

bool check_grounding_theorem(const Representation& rep, const Graph& g) {
    Report report = verify_representation(rep, g);
    if (!report.valid())
        throw std::runtime_error("check_grounding_theorem: representation invalid:\n" + report.to_string());
    Ordering order = grounding_order(rep);
    if (!avoids_all(g, order, grounding_pattern_set(rep.kind))) return false;
    PatternSet strings;
    strings.name = "abcd";
    strings.patterns.push_back(make_ps("abcd"));
    return avoids_all(g, order, strings);
}

// ---------------------------------------------------------------------------
// JSON

namespace {

nlohmann::json rat_json(const Rational& r) {
    auto [num, den] = r.to_int64_pair();
    return nlohmann::json::array({num, den});
}

Rational rat_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("rational must be a [num, den] pair");
    return Rational(j[0].get<long>(), j[1].get<long>());
}

nlohmann::json point_json(const Point& p) { return nlohmann::json::array({rat_json(p.x), rat_json(p.y)}); }

Point point_from_json(const nlohmann::json& j) { return Point{rat_from_json(j[0]), rat_from_json(j[1])}; }

nlohmann::json polyline_json(const Polyline& pl) {
    nlohmann::json j = nlohmann::json::array();
    for (const Point& p : pl) j.push_back(point_json(p));
    return j;
}

Polyline polyline_from_json(const nlohmann::json& j) {
    Polyline pl;
    for (const auto& p : j) pl.push_back(point_from_json(p));
    return pl;
}

}  // namespace

std::string rep_to_json(const Representation& rep) {
    nlohmann::json j;
    j["kind"] = rep_kind_name(rep.kind);
    j["shapes"] = nlohmann::json::array();
    switch (rep.kind) {
        case RepKind::TouchingLShapes:
            for (const auto& s : rep.lshapes)
                j["shapes"].push_back({{"x", rat_json(s.x)}, {"x_right", rat_json(s.x_right)}, {"y", rat_json(s.y)}});
            break;
        case RepKind::TouchingRectangles:
            for (const auto& r : rep.rectangles)
                j["shapes"].push_back({{"ground", point_json(r.ground)},
                                       {"left_corner", point_json(r.left_corner)},
                                       {"right_corner", point_json(r.right_corner)},
                                       {"top_corner", point_json(r.top_corner)}});
            break;
        case RepKind::GroundedStairs:
            for (const auto& s : rep.stairs) j["shapes"].push_back({{"points", polyline_json(s.points)}});
            break;
        case RepKind::IntervalFilaments:
            for (const auto& s : rep.filaments) j["shapes"].push_back({{"points", polyline_json(s.points)}});
            break;
    }
    return j.dump(2);
}

Representation rep_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Representation rep;
    rep.kind = rep_kind_from_name(j.at("kind").get<std::string>());
    for (const auto& s : j.at("shapes")) {
        switch (rep.kind) {
            case RepKind::TouchingLShapes:
                rep.lshapes.push_back(
                    LShape{rat_from_json(s.at("x")), rat_from_json(s.at("x_right")), rat_from_json(s.at("y"))});
                break;
            case RepKind::TouchingRectangles:
                rep.rectangles.push_back(DiagonalRectangle{point_from_json(s.at("ground")),
                                                           point_from_json(s.at("left_corner")),
                                                           point_from_json(s.at("right_corner")),
                                                           point_from_json(s.at("top_corner"))});
                break;
            case RepKind::GroundedStairs:
                rep.stairs.push_back(StairPolyline{polyline_from_json(s.at("points"))});
                break;
            case RepKind::IntervalFilaments:
                rep.filaments.push_back(FilamentPolyline{polyline_from_json(s.at("points"))});
                break;
        }
    }
    return rep;
}

}  // namespace patternforge
