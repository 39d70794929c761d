#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <vector>

namespace patternforge {
namespace oracles {

bool is_acyclic(const Graph& g) {
    int n = g.n();
    std::vector<int> parent(static_cast<std::size_t>(n), -2);
    for (int s = 0; s < n; ++s) {
        if (parent[static_cast<std::size_t>(s)] != -2) continue;
        parent[static_cast<std::size_t>(s)] = -1;
        std::vector<int> stack = {s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < n; ++v) {
                if (!g.adjacent(u, v)) continue;
                if (parent[static_cast<std::size_t>(u)] == v) continue;
                if (parent[static_cast<std::size_t>(v)] != -2) return false;
                parent[static_cast<std::size_t>(v)] = u;
                stack.push_back(v);
            }
        }
    }
    return true;
}

bool is_linear_forest(const Graph& g) {
    if (!is_acyclic(g)) return false;
    for (int u = 0; u < g.n(); ++u)
        if (g.degree(u) > 2) return false;
    return true;
}

bool is_star_plus_isolated(const Graph& g) {
    auto es = g.edges();
    if (es.empty()) return true;
    for (int center : {es[0].first, es[0].second}) {
        bool ok = true;
        for (auto [u, v] : es)
            if (u != center && v != center) { ok = false; break; }
        if (ok) return true;
    }
    return false;
}

bool is_bipartite(const Graph& g) {
    int n = g.n();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    for (int s = 0; s < n; ++s) {
        if (color[static_cast<std::size_t>(s)] != -1) continue;
        color[static_cast<std::size_t>(s)] = 0;
        std::vector<int> stack = {s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < n; ++v) {
                if (!g.adjacent(u, v)) continue;
                if (color[static_cast<std::size_t>(v)] == -1) {
                    color[static_cast<std::size_t>(v)] = 1 - color[static_cast<std::size_t>(u)];
                    stack.push_back(v);
                } else if (color[static_cast<std::size_t>(v)] == color[static_cast<std::size_t>(u)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool has_triangle(const Graph& g) {
    int n = g.n();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (!g.adjacent(a, b)) continue;
            if (g.row(a) & g.row(b)) return true;
        }
    return false;
}

namespace {

// Is the induced subgraph on `verts` exactly a (chordless) cycle?
bool induces_cycle(const Graph& g, const std::vector<int>& verts) {
    Graph h = g.induced(verts);
    if (h.edge_count() != h.n()) return false;
    for (int u = 0; u < h.n(); ++u)
        if (h.degree(u) != 2) return false;
    return h.is_connected();
}

}  // namespace

bool is_chordal(const Graph& g) {
    int n = g.n();
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        if (__builtin_popcountll(mask) < 4) continue;
        std::vector<int> verts;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1u) verts.push_back(v);
        if (induces_cycle(g, verts)) return false;
    }
    return true;
}

bool has_transitive_orientation(const Graph& g) {
    auto es = g.edges();
    int m = static_cast<int>(es.size());
    if (m == 0) return true;
    int n = g.n();
    // dir[u][v] for adjacent pairs; brute force over orientations.
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
        std::vector<std::uint64_t> out(static_cast<std::size_t>(n), 0);
        for (int e = 0; e < m; ++e) {
            auto [u, v] = es[static_cast<std::size_t>(e)];
            if ((mask >> e) & 1u)
                out[static_cast<std::size_t>(u)] |= 1ull << v;
            else
                out[static_cast<std::size_t>(v)] |= 1ull << u;
        }
        bool transitive = true;
        for (int u = 0; u < n && transitive; ++u) {
            std::uint64_t mid = out[static_cast<std::size_t>(u)];
            for (int v = 0; v < n && transitive; ++v) {
                if (!((mid >> v) & 1u)) continue;
                // u -> v -> w requires u -> w
                std::uint64_t need = out[static_cast<std::size_t>(v)];
                if (need & ~out[static_cast<std::size_t>(u)]) transitive = false;
            }
        }
        if (transitive) return true;
    }
    return false;
}

bool is_cocomparability(const Graph& g) { return has_transitive_orientation(g.complement()); }

bool is_permutation_graph(const Graph& g) {
    return has_transitive_orientation(g) && is_cocomparability(g);
}

bool is_3colorable(const Graph& g) {
    int n = g.n();
    std::vector<int> color(static_cast<std::size_t>(n), 0);
    std::function<bool(int)> go = [&](int v) {
        if (v == n) return true;
        for (int c = 0; c < 3; ++c) {
            bool ok = true;
            for (int u = 0; u < v; ++u)
                if (g.adjacent(u, v) && color[static_cast<std::size_t>(u)] == c) { ok = false; break; }
            if (!ok) continue;
            color[static_cast<std::size_t>(v)] = c;
            if (go(v + 1)) return true;
        }
        return false;
    };
    return go(0);
}

bool has_k4(const Graph& g) {
    int n = g.n();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (!g.adjacent(a, b)) continue;
            std::uint64_t common = g.row(a) & g.row(b);
            for (int c = b + 1; c < n; ++c) {
                if (!((common >> c) & 1u)) continue;
                if (common & g.row(c) & ~((1ull << (c + 1)) - 1)) return true;
            }
        }
    return false;
}

bool is_split(const Graph& g) {
    int n = g.n();
    for (std::uint64_t clique = 0; clique < (1ull << n); ++clique) {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u) {
            bool in_k = (clique >> u) & 1u;
            for (int v = u + 1; v < n && ok; ++v) {
                bool vin = (clique >> v) & 1u;
                if (in_k && vin && !g.adjacent(u, v)) ok = false;
                if (!in_k && !vin && g.adjacent(u, v)) ok = false;
            }
        }
        if (ok) return true;
    }
    return false;
}

namespace {

// Can `a` reach `b` while avoiding the closed neighborhood of `c`?
bool connected_avoiding(const Graph& g, int a, int b, int c) {
    std::uint64_t blocked = g.row(c) | (1ull << c);
    if ((blocked >> a) & 1u || (blocked >> b) & 1u) return false;
    std::uint64_t seen = 1ull << a, frontier = seen;
    while (frontier) {
        std::uint64_t next = 0;
        for (int u = 0; u < g.n(); ++u)
            if ((frontier >> u) & 1u) next |= g.row(u);
        next &= ~blocked;
        frontier = next & ~seen;
        seen |= next;
    }
    return (seen >> b) & 1u;
}

}  // namespace

bool is_at_free(const Graph& g) {
    int n = g.n();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                if (connected_avoiding(g, a, b, c) && connected_avoiding(g, a, c, b) &&
                    connected_avoiding(g, b, c, a))
                    return false;
            }
    return true;
}

bool is_interval(const Graph& g) { return is_chordal(g) && is_at_free(g); }

bool is_p4_free(const Graph& g) {
    int n = g.n();
    static const Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
    std::vector<int> verts(4);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    verts = {a, b, c, d};
                    Graph h = g.induced(verts);
                    if (h.edge_count() == 3 && isomorphic(h, p4)) return false;
                }
    return true;
}

bool is_strongly_chordal(const Graph& g) {
    if (g.n() > 7) throw OrderTooLarge("is_strongly_chordal: sun scan only valid for n <= 7");
    if (!is_chordal(g)) return false;
    // The only sun on <= 7 vertices is the complete 3-sun: triangle hub
    // {0,1,2} plus independent rim {3,4,5}, rim vertex i+3 adjacent to hub
    // vertices i and (i+1) mod 3.
    static const Graph sun3(
        6, {{0, 1}, {0, 2}, {1, 2}, {3, 0}, {3, 1}, {4, 1}, {4, 2}, {5, 2}, {5, 0}});
    int n = g.n();
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        if (__builtin_popcountll(mask) != 6) continue;
        std::vector<int> verts;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1u) verts.push_back(v);
        Graph h = g.induced(verts);
        if (h.edge_count() == sun3.edge_count() && isomorphic(h, sun3)) return false;
    }
    return true;
}

}  // namespace oracles
}  // namespace patternforge
