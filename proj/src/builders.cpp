#include "builders.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "named_classes.hpp"
#include "oracles.hpp"
#include "solver.hpp"

namespace patternforge {

namespace {

void self_verify(const Representation& rep, const Graph& g, const char* builder) {
    Report report = verify_representation(rep, g);
    if (!report.valid())
        throw InternalContradiction(std::string(builder) + ": output failed verification:\n" +
                                    report.to_string());
}

void require_avoiding(const Graph& g, const Ordering& sigma, const std::string& subset) {
    PatternSet ps;
    ps.patterns.push_back(make_ps(subset));
    if (!avoids_all(g, sigma, ps))
        throw OrderingNotAvoiding("ordering realizes the forbidden pattern P_" +
                                  (subset.empty() ? std::string("empty") : subset));
}

}  // namespace

// ---------------------------------------------------------------------------
// Touching L-shapes (forests)

namespace {

struct LShapeBuilder {
    const Graph& g;
    std::vector<LShape> shapes;
    std::vector<char> visited;

    explicit LShapeBuilder(const Graph& graph)
        : g(graph), shapes(static_cast<std::size_t>(graph.n())), visited(static_cast<std::size_t>(graph.n()), 0) {}

    // Places the children of v inside the free rectangle (x_star, x(v)) x [0, y_star].
    void place_children(int v, const Rational& x_star, const Rational& y_star) {
        std::vector<int> children;
        for (int u = 0; u < g.n(); ++u)
            if (g.adjacent(v, u) && !visited[static_cast<std::size_t>(u)]) children.push_back(u);
        if (children.empty()) return;
        Rational k(static_cast<long>(children.size()));
        const Rational& xv = shapes[static_cast<std::size_t>(v)].x;
        Rational width = (xv - x_star) / (k + 1);
        Rational child_x_star = x_star;
        for (std::size_t i = 0; i < children.size(); ++i) {
            int c = children[i];
            Rational idx(static_cast<long>(i + 1));
            LShape s;
            s.x = x_star + idx * width;
            s.x_right = xv;
            s.y = (k - idx + 1) * y_star / (k + 1);
            shapes[static_cast<std::size_t>(c)] = s;
            visited[static_cast<std::size_t>(c)] = 1;
            place_children(c, child_x_star, s.y);
            child_x_star = s.x;
        }
    }
};

}  // namespace

Representation build_touching_lshapes(const Graph& g) {
    if (!oracles::is_acyclic(g)) throw NotAForest();
    LShapeBuilder b(g);
    int component = 0;
    for (int root = 0; root < g.n(); ++root) {
        if (b.visited[static_cast<std::size_t>(root)]) continue;
        // Component sits in the unit square [2c, 2c+1] x [0,1]; the root is a
        // bare vertical segment on the square's right edge.
        Rational left(2L * component);
        LShape s;
        s.x = left + 1;
        s.x_right = s.x;
        s.y = 1;
        b.shapes[static_cast<std::size_t>(root)] = s;
        b.visited[static_cast<std::size_t>(root)] = 1;
        b.place_children(root, left, Rational(1));
        ++component;
    }
    Representation rep;
    rep.kind = RepKind::TouchingLShapes;
    rep.lshapes = std::move(b.shapes);
    self_verify(rep, g, "build_touching_lshapes");
    return rep;
}

// ---------------------------------------------------------------------------
// Touching rectangles (orderings avoiding the crossing pattern)

Representation build_touching_rectangles(const Graph& g, const Ordering& sigma) {
    if (!sigma.is_permutation() || sigma.n() != g.n())
        throw InvalidOrdering("build_touching_rectangles: not a permutation");
    require_avoiding(g, sigma, "");
    int n = g.n();
    std::vector<int> rank_of(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) rank_of[static_cast<std::size_t>(sigma.ranks[static_cast<std::size_t>(t)])] = t + 1;
    Representation rep;
    rep.kind = RepKind::TouchingRectangles;
    rep.rectangles.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        long t = rank_of[static_cast<std::size_t>(v)];
        long tl = t, tr = t;  // v counts as its own neighbor
        for (int u = 0; u < n; ++u) {
            if (!g.adjacent(u, v)) continue;
            long ru = rank_of[static_cast<std::size_t>(u)];
            tl = std::min(tl, ru);
            tr = std::max(tr, ru);
        }
        DiagonalRectangle r;
        r.ground = Point{Rational(t), Rational(0)};
        r.left_corner = Point{Rational(t + tl, 2), Rational(t - tl, 2)};
        r.right_corner = Point{Rational(t + tr, 2), Rational(tr - t, 2)};
        r.top_corner = Point{Rational(tl + tr, 2), Rational(tr - tl, 2)};
        rep.rectangles[static_cast<std::size_t>(v)] = r;
    }
    self_verify(rep, g, "build_touching_rectangles");
    return rep;
}

// ---------------------------------------------------------------------------
// Interval filaments

namespace {

struct FilamentPlan {
    // Everything indexed by 1-based rank.
    int n;
    std::vector<int> vertex_of;                  // rank -> vertex id
    std::vector<std::vector<char>> adj;          // rank adjacency
    std::vector<int> rmost;                      // rightmost neighbor rank (self if none)
    std::vector<Rational> eps, height;           // per-rank epsilon and plateau height
    std::vector<int> spike_top_rank;             // rank whose height the spike reaches; 0 = no spike
    std::vector<std::vector<int>> chimneys_at;   // plateau rank -> spike ranks it must vault over
    std::vector<Rational> chimney_eps_base;      // per spike rank
    std::vector<std::map<int, Rational>> chimney_eps;  // spike rank -> (plateau rank -> epsilon)
    std::vector<Rational> slope_dx;              // per spike rank: descent extent
};

FilamentPlan plan_filaments(const Graph& g, const Ordering& sigma) {
    FilamentPlan plan;
    int n = g.n();
    plan.n = n;
    plan.vertex_of.assign(static_cast<std::size_t>(n + 1), -1);
    for (int t = 0; t < n; ++t) plan.vertex_of[static_cast<std::size_t>(t + 1)] = sigma.ranks[static_cast<std::size_t>(t)];
    plan.adj.assign(static_cast<std::size_t>(n + 1), std::vector<char>(static_cast<std::size_t>(n + 1), 0));
    for (int u = 1; u <= n; ++u)
        for (int v = 1; v <= n; ++v)
            plan.adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] =
                u != v && g.adjacent(plan.vertex_of[static_cast<std::size_t>(u)],
                                     plan.vertex_of[static_cast<std::size_t>(v)]);

    plan.rmost.assign(static_cast<std::size_t>(n + 1), 0);
    plan.eps.assign(static_cast<std::size_t>(n + 1), Rational(0));
    plan.height.assign(static_cast<std::size_t>(n + 1), Rational(0));
    for (int u = 1; u <= n; ++u) {
        int r = u;
        for (int v = u + 1; v <= n; ++v)
            if (plan.adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) r = v;
        plan.rmost[static_cast<std::size_t>(u)] = r;
        plan.eps[static_cast<std::size_t>(u)] = Rational(n - u + 1, n + 1);
        plan.height[static_cast<std::size_t>(u)] = Rational(r - u) + plan.eps[static_cast<std::size_t>(u)];
    }

    // Spikes: rise to the highest plateau of a left neighbor whose square
    // nests the current one (those give edges the squares miss).
    plan.spike_top_rank.assign(static_cast<std::size_t>(n + 1), 0);
    for (int v = 1; v <= n; ++v) {
        int best = 0;
        for (int w = 1; w < v; ++w) {
            if (!plan.adj[static_cast<std::size_t>(w)][static_cast<std::size_t>(v)]) continue;
            if (plan.rmost[static_cast<std::size_t>(w)] < plan.rmost[static_cast<std::size_t>(v)]) continue;
            if (best == 0 || plan.height[static_cast<std::size_t>(w)] > plan.height[static_cast<std::size_t>(best)])
                best = w;
        }
        plan.spike_top_rank[static_cast<std::size_t>(v)] = best;
    }

    // Chimney planning, one spike at a time, plateaus from highest down.
    plan.chimneys_at.assign(static_cast<std::size_t>(n + 1), {});
    plan.chimney_eps_base.assign(static_cast<std::size_t>(n + 1), Rational(0));
    plan.chimney_eps.assign(static_cast<std::size_t>(n + 1), {});
    plan.slope_dx.assign(static_cast<std::size_t>(n + 1), Rational(0));
    for (int v = 1; v <= n; ++v) {
        int wtop = plan.spike_top_rank[static_cast<std::size_t>(v)];
        if (wtop == 0) continue;
        Rational spike_top = plan.height[static_cast<std::size_t>(wtop)];
        Rational hv = plan.height[static_cast<std::size_t>(v)];

        // Plateaus the spike extension pierces or touches.
        std::vector<int> crossers;
        for (int w = 1; w < v; ++w) {
            if (plan.rmost[static_cast<std::size_t>(w)] < v) continue;  // plateau ends left of the spike
            const Rational& hw = plan.height[static_cast<std::size_t>(w)];
            if (hv < hw && hw <= spike_top) crossers.push_back(w);
        }
        std::sort(crossers.begin(), crossers.end(), [&](int a, int b) {
            return plan.height[static_cast<std::size_t>(a)] > plan.height[static_cast<std::size_t>(b)];
        });

        std::vector<int> need_chimney;
        for (int w : crossers) {
            if (plan.adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)]) continue;
            // The construction's impossible branch: a non-neighbor plateau
            // that cannot be lifted because a higher crosser is itself not a
            // neighbor of it.
            for (int x : crossers) {
                if (plan.height[static_cast<std::size_t>(x)] <= plan.height[static_cast<std::size_t>(w)]) continue;
                if (!plan.adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(x)]) continue;  // already lifted away
                if (!plan.adj[static_cast<std::size_t>(w)][static_cast<std::size_t>(x)])
                    throw InternalContradiction("filament chimney stage reached the impossible branch");
            }
            need_chimney.push_back(w);
        }

        // Epsilon schedule: strictly decreasing, all clear of neighboring
        // plateaus and of every vertical lattice line.
        Rational gap_above(1, 4);
        for (int w = 1; w <= plan.n; ++w) {
            const Rational& hw = plan.height[static_cast<std::size_t>(w)];
            if (hw > spike_top) gap_above = rational_min(gap_above, hw - spike_top);
        }
        Rational base = rational_min(rational_min(Rational(1, 4), gap_above), Rational(1, n + 1)) / 2;
        plan.chimney_eps_base[static_cast<std::size_t>(v)] = base;
        long m = static_cast<long>(need_chimney.size());
        for (long k = 0; k < m; ++k) {
            int w = need_chimney[static_cast<std::size_t>(k)];
            plan.chimney_eps[static_cast<std::size_t>(v)][w] = base * Rational(m + 1 - k, m + 1);
            plan.chimneys_at[static_cast<std::size_t>(w)].push_back(v);
        }
        // Descent stays strictly inside the innermost chimney.
        Rational smallest = m > 0 ? base * Rational(1, m + 1) : base;
        plan.slope_dx[static_cast<std::size_t>(v)] = rational_min(Rational(1, 2 * (n + 1)), smallest / 2);
    }
    return plan;
}

}  // namespace

Representation build_interval_filaments(const Graph& g, const Ordering& sigma) {
    if (!sigma.is_permutation() || sigma.n() != g.n())
        throw InvalidOrdering("build_interval_filaments: not a permutation");
    require_avoiding(g, sigma, "a");
    FilamentPlan plan = plan_filaments(g, sigma);
    int n = g.n();
    Representation rep;
    rep.kind = RepKind::IntervalFilaments;
    rep.filaments.resize(static_cast<std::size_t>(n));
    for (int u = 1; u <= n; ++u) {
        Polyline pl;
        Rational xu(u);
        const Rational& hu = plan.height[static_cast<std::size_t>(u)];
        Rational x_right = Rational(plan.rmost[static_cast<std::size_t>(u)]) + plan.eps[static_cast<std::size_t>(u)];
        pl.push_back(Point{xu, Rational(0)});
        int wtop = plan.spike_top_rank[static_cast<std::size_t>(u)];
        Rational plateau_from = xu;
        if (wtop != 0) {
            pl.push_back(Point{xu, plan.height[static_cast<std::size_t>(wtop)]});
            plateau_from = xu + plan.slope_dx[static_cast<std::size_t>(u)];
            pl.push_back(Point{plateau_from, hu});
        } else {
            pl.push_back(Point{xu, hu});
        }
        // Plateau with chimney detours over later spikes, left to right.
        std::vector<int> vaults = plan.chimneys_at[static_cast<std::size_t>(u)];
        std::sort(vaults.begin(), vaults.end());
        for (int spike : vaults) {
            Rational sx(spike);
            Rational eps = plan.chimney_eps[static_cast<std::size_t>(spike)].at(u);
            Rational top =
                plan.height[static_cast<std::size_t>(plan.spike_top_rank[static_cast<std::size_t>(spike)])] + eps;
            pl.push_back(Point{sx - eps, hu});
            pl.push_back(Point{sx - eps, top});
            pl.push_back(Point{sx + eps, top});
            pl.push_back(Point{sx + eps, hu});
        }
        pl.push_back(Point{x_right, hu});
        pl.push_back(Point{x_right, Rational(0)});
        rep.filaments[static_cast<std::size_t>(plan.vertex_of[static_cast<std::size_t>(u)])] =
            FilamentPolyline{pl};
    }
    self_verify(rep, g, "build_interval_filaments");
    return rep;
}

// ---------------------------------------------------------------------------
// Grounded stairs

namespace {

struct StairsState {
    int n;
    std::vector<Polyline> chain;      // per rank, grows rightward/upward
    std::vector<char> cut;            // ray already truncated?
    std::set<Rational> used_x, used_y;
    long counter = 1;

    explicit StairsState(int order) : n(order), chain(static_cast<std::size_t>(order + 1)), cut(static_cast<std::size_t>(order + 1), 0) {
        used_y.insert(Rational(0));
        used_y.insert(Rational(1));
    }

    Rational lane(int rank) const { return Rational(rank) + Rational(rank, n + 1); }

    Rational top_of(int rank) const {
        Rational t(0);
        for (const Point& p : chain[static_cast<std::size_t>(rank)]) t = rational_max(t, p.y);
        return t;
    }

    Rational fresh_column(const Rational& below, const Rational& above) {
        // A vertical abscissa strictly inside (above, below), approaching
        // `below` from the left as the counter grows.
        while (true) {
            Rational cand = below - Rational(1, 2 * (n + 1)) * Rational(1, counter++);
            if (cand > above && !used_x.count(cand)) {
                used_x.insert(cand);
                return cand;
            }
        }
    }

    Rational fresh_height(const Rational& min_exclusive) {
        Rational cand = min_exclusive + Rational(1, n + 1);
        while (used_y.count(cand)) cand += Rational(1, (n + 1) * counter++);
        used_y.insert(cand);
        return cand;
    }

    // Fresh height strictly above `lo`, and strictly below `hi` when given.
    Rational fresh_height_between(const Rational& lo, const std::optional<Rational>& hi) {
        if (!hi) return fresh_height(lo);
        Rational span = *hi - lo;
        while (true) {
            Rational cand = lo + span * Rational(1, 1 + counter++);
            if (cand > lo && cand < *hi && !used_y.count(cand)) {
                used_y.insert(cand);
                return cand;
            }
        }
    }

    Rational fresh_endpoint(const Rational& past) {
        while (true) {
            Rational cand = past + Rational(1, n + 1) * Rational(1, counter++);
            if (!used_x.count(cand)) {
                used_x.insert(cand);
                return cand;
            }
        }
    }

    void append_horizontal(int rank, const Rational& to_x) {
        Polyline& pl = chain[static_cast<std::size_t>(rank)];
        Point& last = pl.back();
        if (pl.size() >= 2 && pl[pl.size() - 2].y == last.y)
            last.x = to_x;  // extend the current horizontal run
        else
            pl.push_back(Point{to_x, last.y});
    }

    void append_vertical(int rank, const Rational& to_y) {
        Polyline& pl = chain[static_cast<std::size_t>(rank)];
        Point& last = pl.back();
        if (pl.size() >= 2 && pl[pl.size() - 2].x == last.x)
            last.y = to_y;
        else
            pl.push_back(Point{last.x, to_y});
    }
};

struct VerticalPiece {
    Rational x, y_lo, y_hi;
    int owner;
};

struct HorizontalPiece {
    Rational y, x_lo, x_hi;
    int owner;
};

void collect_pieces(const StairsState& st, int upto_rank, std::vector<VerticalPiece>& vs,
                    std::vector<HorizontalPiece>& hs) {
    vs.clear();
    hs.clear();
    for (int r = 1; r <= upto_rank; ++r) {
        const Polyline& pl = st.chain[static_cast<std::size_t>(r)];
        for (std::size_t i = 0; i + 1 < pl.size(); ++i) {
            if (pl[i].x == pl[i + 1].x)
                vs.push_back({pl[i].x, rational_min(pl[i].y, pl[i + 1].y), rational_max(pl[i].y, pl[i + 1].y), r});
            else
                hs.push_back({pl[i].y, rational_min(pl[i].x, pl[i + 1].x), rational_max(pl[i].x, pl[i + 1].x), r});
        }
    }
}

}  // namespace

Representation build_grounded_stairs(const Graph& g, const Ordering& sigma) {
    if (!sigma.is_permutation() || sigma.n() != g.n())
        throw InvalidOrdering("build_grounded_stairs: not a permutation");
    require_avoiding(g, sigma, "ab");
    int n = g.n();
    StairsState st(n);
    std::vector<std::vector<char>> adj(static_cast<std::size_t>(n + 1),
                                       std::vector<char>(static_cast<std::size_t>(n + 1), 0));
    for (int u = 1; u <= n; ++u)
        for (int v = 1; v <= n; ++v)
            adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] =
                u != v && g.adjacent(sigma.ranks[static_cast<std::size_t>(u - 1)],
                                     sigma.ranks[static_cast<std::size_t>(v - 1)]);

    for (int r = 1; r <= n; ++r) {
        st.used_x.insert(st.lane(r));
        st.chain[static_cast<std::size_t>(r)] = {Point{st.lane(r), Rational(0)}};
    }

    std::vector<VerticalPiece> verticals;
    std::vector<HorizontalPiece> horizontals;

    for (int i = 1; i <= n; ++i) {
        Rational ray_x = st.lane(i);
        std::vector<Rational> hits;

        std::vector<int> movers;
        for (int j = 1; j < i; ++j)
            if (adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) movers.push_back(j);
        std::sort(movers.begin(), movers.end(), std::greater<int>());  // rightmost grounding first

        for (int j : movers) {
            collect_pieces(st, i - 1, verticals, horizontals);
            Polyline& pl = st.chain[static_cast<std::size_t>(j)];
            Rational x = pl.back().x;
            Rational y = pl.back().y;
            if (x >= ray_x) throw InternalContradiction("stairs: endpoint already beyond the new ray");

            while (true) {
                // First blocking vertical owned by a non-neighbor of j.
                const VerticalPiece* blocker = nullptr;
                for (const VerticalPiece& vp : verticals) {
                    if (vp.owner == j || adj[static_cast<std::size_t>(j)][static_cast<std::size_t>(vp.owner)])
                        continue;
                    if (vp.x <= x || vp.x >= ray_x) continue;
                    if (!(vp.y_lo < y && y < vp.y_hi)) continue;
                    if (!blocker || vp.x < blocker->x) blocker = &vp;
                }
                if (!blocker) break;

                int r = blocker->owner;
                Rational floor = rational_max(st.top_of(r), y);
                std::optional<Rational> ceiling;  // lowest full-width cap seen
                Rational lower_bound = x;
                while (true) {
                    if (ceiling && *ceiling <= floor)
                        throw InternalContradiction("stairs: climb capped by a crossing plateau");
                    Rational col = st.fresh_column(blocker->x, lower_bound);
                    Rational target = st.fresh_height_between(floor, ceiling);
                    // Scan horizontals capping the climb at this column.
                    const HorizontalPiece* cap = nullptr;
                    for (const HorizontalPiece& hp : horizontals) {
                        if (hp.owner == j || adj[static_cast<std::size_t>(j)][static_cast<std::size_t>(hp.owner)])
                            continue;
                        if (!(hp.x_lo < col && col < hp.x_hi)) continue;
                        if (!(y < hp.y && hp.y <= target)) continue;
                        if (!cap || hp.y < cap->y) cap = &hp;
                    }
                    if (!cap) {
                        st.append_horizontal(j, col);
                        st.append_vertical(j, target);
                        x = col;
                        y = target;
                        break;
                    }
                    if (cap->x_hi >= blocker->x) {
                        // The run spans the whole climbing window; the only
                        // hope is a target below it but still above r.
                        if (!(cap->y > floor))
                            throw InternalContradiction("stairs: climb capped by a crossing plateau");
                        ceiling = ceiling ? rational_min(*ceiling, cap->y) : cap->y;
                    } else {
                        lower_bound = cap->x_hi;  // retry right of the capping run
                    }
                }
            }

            // Clear road: cross the ray and stop just beyond it.
            Rational x_end = st.fresh_endpoint(ray_x);
            st.append_horizontal(j, x_end);
            hits.push_back(y);
        }

        // Truncate the ray just above its last intersection. A vertex with
        // neighbors gets a globally fresh top: its later extensions travel at
        // that height, and no two staircases may share a horizontal level.
        // Isolated vertices keep a plain unit segment.
        Rational top(1);
        if (!hits.empty()) {
            Rational high(0);
            for (const Rational& h : hits) high = rational_max(high, h);
            top = st.fresh_height(high);
        } else if (g.degree(sigma.ranks[static_cast<std::size_t>(i - 1)]) > 0) {
            top = st.fresh_height(Rational(1));
        }
        st.append_vertical(i, top);
        st.cut[static_cast<std::size_t>(i)] = 1;
    }

    Representation rep;
    rep.kind = RepKind::GroundedStairs;
    rep.stairs.resize(static_cast<std::size_t>(n));
    for (int r = 1; r <= n; ++r)
        rep.stairs[static_cast<std::size_t>(sigma.ranks[static_cast<std::size_t>(r - 1)])] =
            StairPolyline{st.chain[static_cast<std::size_t>(r)]};
    self_verify(rep, g, "build_grounded_stairs");
    return rep;
}

}  // namespace patternforge
