#pragma once

#include <optional>
#include <vector>

#include "rational.hpp"

namespace patternforge {

struct Point {
    Rational x, y;

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
    bool operator<(const Point& o) const { return x < o.x || (x == o.x && y < o.y); }
};

struct Segment {
    Point a, b;
};

struct DegenerateSegment : std::invalid_argument {
    DegenerateSegment() : std::invalid_argument("segment endpoints coincide") {}
};

// Exact classification of the intersection of two closed segments.
struct SegIntersection {
    enum class Kind { Disjoint, AtPoint, Overlap };
    Kind kind = Kind::Disjoint;
    Point point;      // valid for AtPoint
    Segment overlap;  // valid for Overlap (collinear sub-segment, possibly a point? no: proper segment)
};

SegIntersection seg_intersect(const Segment& s1, const Segment& s2);

// Twice the signed area of triangle (a,b,c); sign gives orientation.
Rational cross(const Point& a, const Point& b, const Point& c);

bool point_on_segment(const Point& p, const Segment& s);

// Polylines: consecutive distinct points joined by segments.
using Polyline = std::vector<Point>;

bool polyline_is_simple(const Polyline& pl);
bool polylines_intersect(const Polyline& a, const Polyline& b);
bool point_on_polyline(const Point& p, const Polyline& pl);

// Contact features between two polylines: the isolated intersection points
// and the collinear overlap sub-segments.
struct PolylineContacts {
    std::vector<Point> points;
    std::vector<Segment> overlaps;
    bool any() const { return !points.empty() || !overlaps.empty(); }
};

PolylineContacts polyline_contacts(const Polyline& a, const Polyline& b);

// True when the two curves transversally cross at p (their local direction
// rays interleave around p). Contact points where they merely touch return
// false. Both polylines must be simple and contain p.
bool transversal_crossing_at(const Polyline& a, const Polyline& b, const Point& p);

}  // namespace patternforge
