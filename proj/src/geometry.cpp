#include "geometry.hpp"

#include <algorithm>
#include <set>

namespace patternforge {

Rational cross(const Point& a, const Point& b, const Point& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

bool point_on_segment(const Point& p, const Segment& s) {
    if (cross(s.a, s.b, p) != Rational(0)) return false;
    return rational_min(s.a.x, s.b.x) <= p.x && p.x <= rational_max(s.a.x, s.b.x) &&
           rational_min(s.a.y, s.b.y) <= p.y && p.y <= rational_max(s.a.y, s.b.y);
}

SegIntersection seg_intersect(const Segment& s1, const Segment& s2) {
    if (s1.a == s1.b || s2.a == s2.b) throw DegenerateSegment();
    SegIntersection out;

    Rational d1x = s1.b.x - s1.a.x, d1y = s1.b.y - s1.a.y;
    Rational d2x = s2.b.x - s2.a.x, d2y = s2.b.y - s2.a.y;
    Rational denom = d1x * d2y - d1y * d2x;

    if (denom == Rational(0)) {
        // Parallel. Only collinear segments can meet.
        if (cross(s1.a, s1.b, s2.a) != Rational(0)) return out;
        // Parameterize both by the dominant axis of s1.
        bool use_x = d1x != Rational(0);
        auto coord = [&](const Point& p) { return use_x ? p.x : p.y; };
        Rational lo1 = rational_min(coord(s1.a), coord(s1.b)), hi1 = rational_max(coord(s1.a), coord(s1.b));
        Rational lo2 = rational_min(coord(s2.a), coord(s2.b)), hi2 = rational_max(coord(s2.a), coord(s2.b));
        Rational lo = rational_max(lo1, lo2), hi = rational_min(hi1, hi2);
        if (lo > hi) return out;
        auto at = [&](const Rational& c) {
            if (use_x) {
                Rational t = (c - s1.a.x) / d1x;
                return Point{c, s1.a.y + t * d1y};
            }
            Rational t = (c - s1.a.y) / d1y;
            return Point{s1.a.x + t * d1x, c};
        };
        if (lo == hi) {
            out.kind = SegIntersection::Kind::AtPoint;
            out.point = at(lo);
        } else {
            out.kind = SegIntersection::Kind::Overlap;
            out.overlap = Segment{at(lo), at(hi)};
        }
        return out;
    }

    Rational rx = s2.a.x - s1.a.x, ry = s2.a.y - s1.a.y;
    Rational t = (rx * d2y - ry * d2x) / denom;
    Rational u = (rx * d1y - ry * d1x) / denom;
    if (t < Rational(0) || t > Rational(1) || u < Rational(0) || u > Rational(1)) return out;
    out.kind = SegIntersection::Kind::AtPoint;
    out.point = Point{s1.a.x + t * d1x, s1.a.y + t * d1y};
    return out;
}

bool polyline_is_simple(const Polyline& pl) {
    std::size_t m = pl.size();
    if (m < 2) return false;
    for (std::size_t i = 0; i + 1 < m; ++i)
        if (pl[i] == pl[i + 1]) return false;
    for (std::size_t i = 0; i + 1 < m; ++i) {
        Segment si{pl[i], pl[i + 1]};
        for (std::size_t j = i + 1; j + 1 < m; ++j) {
            Segment sj{pl[j], pl[j + 1]};
            SegIntersection x = seg_intersect(si, sj);
            if (j == i + 1) {
                // Adjacent segments may only share the joint vertex.
                if (x.kind != SegIntersection::Kind::AtPoint || x.point != pl[j]) return false;
            } else if (x.kind != SegIntersection::Kind::Disjoint) {
                return false;
            }
        }
    }
    return true;
}

bool polylines_intersect(const Polyline& a, const Polyline& b) {
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
        for (std::size_t j = 0; j + 1 < b.size(); ++j)
            if (seg_intersect(Segment{a[i], a[i + 1]}, Segment{b[j], b[j + 1]}).kind !=
                SegIntersection::Kind::Disjoint)
                return true;
    return false;
}

bool point_on_polyline(const Point& p, const Polyline& pl) {
    for (std::size_t i = 0; i + 1 < pl.size(); ++i)
        if (point_on_segment(p, Segment{pl[i], pl[i + 1]})) return true;
    return false;
}

PolylineContacts polyline_contacts(const Polyline& a, const Polyline& b) {
    PolylineContacts out;
    std::set<Point> pts;
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
        for (std::size_t j = 0; j + 1 < b.size(); ++j) {
            SegIntersection x = seg_intersect(Segment{a[i], a[i + 1]}, Segment{b[j], b[j + 1]});
            if (x.kind == SegIntersection::Kind::AtPoint)
                pts.insert(x.point);
            else if (x.kind == SegIntersection::Kind::Overlap)
                out.overlaps.push_back(x.overlap);
        }
    // Points interior to a recorded overlap are not isolated contacts.
    for (const Point& p : pts) {
        bool covered = false;
        for (const Segment& s : out.overlaps)
            if (point_on_segment(p, s)) { covered = true; break; }
        if (!covered) out.points.push_back(p);
    }
    return out;
}

namespace {

struct Ray {
    Rational dx, dy;
    int owner;  // 0 = first polyline, 1 = second
};

// Strict circular order on directions (exact). Half-plane first, then turn.
bool ray_less(const Ray& r, const Ray& s) {
    auto half = [](const Ray& v) { return (v.dy < Rational(0) || (v.dy == Rational(0) && v.dx < Rational(0))) ? 1 : 0; };
    int hr = half(r), hs = half(s);
    if (hr != hs) return hr < hs;
    Rational cr = r.dx * s.dy - r.dy * s.dx;
    return cr > Rational(0);
}

void collect_rays(const Polyline& pl, const Point& p, int owner, std::vector<Ray>& rays) {
    for (std::size_t i = 0; i + 1 < pl.size(); ++i) {
        Segment s{pl[i], pl[i + 1]};
        if (!point_on_segment(p, s)) continue;
        if (p != s.a) rays.push_back({s.a.x - p.x, s.a.y - p.y, owner});
        if (p != s.b) rays.push_back({s.b.x - p.x, s.b.y - p.y, owner});
    }
}

}  // namespace

bool transversal_crossing_at(const Polyline& a, const Polyline& b, const Point& p) {
    std::vector<Ray> rays;
    collect_rays(a, p, 0, rays);
    collect_rays(b, p, 1, rays);
    // A curve passing through p contributes two rays; an endpoint only one.
    int count[2] = {0, 0};
    for (const Ray& r : rays) ++count[r.owner];
    if (count[0] < 2 || count[1] < 2) return false;
    // Coinciding directions from the two curves mean a tangential run along a
    // shared line, not a crossing at this point.
    for (const Ray& r : rays)
        for (const Ray& s : rays)
            if (r.owner != s.owner && r.dx * s.dy == r.dy * s.dx &&
                r.dx * s.dx + r.dy * s.dy > Rational(0))
                return false;
    std::sort(rays.begin(), rays.end(), ray_less);
    int blocks = 0;
    for (std::size_t i = 0; i < rays.size(); ++i)
        if (rays[i].owner != rays[(i + 1) % rays.size()].owner) ++blocks;
    return blocks >= 4;
}

}  // namespace patternforge
