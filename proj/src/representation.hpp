#pragma once

#include <string>
#include <vector>

#include "geometry.hpp"
#include "graph.hpp"
#include "patterns.hpp"

namespace patternforge {

enum class RepKind { TouchingLShapes, TouchingRectangles, IntervalFilaments, GroundedStairs };

std::string rep_kind_name(RepKind kind);
RepKind rep_kind_from_name(const std::string& name);

// Vertical segment from (x,0) to (x,y) extended right by a horizontal segment
// to (x_right,y). x_right == x means the horizontal part is empty (a root
// shape in the forest construction is a bare vertical segment).
struct LShape {
    Rational x, x_right, y;
};

// Rectangle with sides of slope +1 and -1, grounded on y=0 at `ground`.
// Degenerates to a segment or a point when some corners coincide.
struct DiagonalRectangle {
    Point ground, left_corner, right_corner, top_corner;
};

// x- and y-monotone rectilinear curve rising to the right; starts on y=0.
struct StairPolyline {
    Polyline points;
};

// Curve starting and ending on y=0, strictly above in between; the two
// grounding points are its abscissa extremes.
struct FilamentPolyline {
    Polyline points;
};

struct Representation {
    RepKind kind = RepKind::TouchingLShapes;
    std::vector<LShape> lshapes;
    std::vector<DiagonalRectangle> rectangles;
    std::vector<StairPolyline> stairs;
    std::vector<FilamentPolyline> filaments;

    int size() const;
};

struct ShapeCountMismatch : std::runtime_error {
    explicit ShapeCountMismatch(const std::string& what) : std::runtime_error(what) {}
};

Polyline lshape_polyline(const LShape& s);

// Axis-aligned view of a diagonal rectangle in rotated coordinates
// (u, w) = (x+y, x-y); the closed region is [u_lo,u_hi] x [w_lo,w_hi].
struct RotatedBox {
    Rational u_lo, u_hi, w_lo, w_hi;

    bool intersects(const RotatedBox& o) const;
    bool interior_overlaps(const RotatedBox& o) const;
};

RotatedBox rectangle_box(const DiagonalRectangle& r);

// Edge (u,v) iff the closed shapes of u and v share at least one point.
Graph intersection_graph(const Representation& rep);

struct Report {
    std::vector<std::string> violations;

    bool valid() const { return violations.empty(); }
    std::string to_string() const;
};

// Checks per-kind shape invariants, grounding-point distinctness, equality of
// the intersection graph with g, the touching condition for the touching
// kinds, and that no point lies on three or more shapes.
Report verify_representation(const Representation& rep, const Graph& g);

// Shapes sorted by first (leftmost) grounding abscissa.
Ordering grounding_order(const Representation& rep);

// The grounding order of a valid representation avoids the pattern family of
// its kind, and the four-position family of unconstrained grounded shapes.
// Throws std::runtime_error when verify_representation fails.
bool check_grounding_theorem(const Representation& rep, const Graph& g);

// Pattern family the grounding order of each kind is checked against.
PatternSet grounding_pattern_set(RepKind kind);

std::string rep_to_json(const Representation& rep);
Representation rep_from_json(const std::string& text);

}  // namespace patternforge
