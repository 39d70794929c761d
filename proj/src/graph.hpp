#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace patternforge {

// Undirected simple graph on vertices 0..n-1. Immutable after construction;
// adjacency kept as one 64-bit row per vertex (n <= 62, the graph6 short form
// range, which is far beyond what any brute-force routine here accepts).
class Graph {
public:
    explicit Graph(int n);
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }
    int edge_count() const { return m_; }

    bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1u; }
    std::uint64_t row(int u) const { return rows_[u]; }
    int degree(int u) const;

    // Edges as ordered pairs (u < v), sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && rows_ == o.rows_; }
    bool operator!=(const Graph& o) const { return !(*this == o); }

    Graph complement() const;
    Graph relabeled(const std::vector<int>& perm) const;  // vertex u -> perm[u]
    Graph induced(const std::vector<int>& verts) const;

    bool is_connected() const;

private:
    void add_edge(int u, int v);

    int n_ = 0;
    int m_ = 0;
    std::vector<std::uint64_t> rows_;
};

struct ParseError : std::runtime_error {
    std::size_t byte_offset;
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"), byte_offset(offset) {}
};

struct OrderTooLarge : std::runtime_error {
    explicit OrderTooLarge(const std::string& what) : std::runtime_error(what) {}
};

// graph6, standard short form (n <= 62, no header).
Graph parse_graph6(const std::string& text);
std::string emit_graph6(const Graph& g);

// Edge-list JSON: {"n": int, "edges": [[u,v],...]}.
Graph parse_graph_json(const std::string& text);
std::string emit_graph_json(const Graph& g);

// Reads either format: JSON if the first non-space byte is '{', else graph6.
Graph parse_graph_auto(const std::string& text);

// Canonical form: the minimum upper-triangle adjacency bit-string over all
// relabelings (column-major pair order, as in graph6), prefixed with the
// order. Equal exactly for isomorphic graphs. Brute force with lexicographic
// branch-and-bound; n <= 10.
std::string canonical_form(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

// All non-isomorphic simple graphs of each order 1..n_max, built by vertex
// augmentation from the previous order, deduplicated via canonical_form.
// Within one order the graphs are sorted by canonical string. n_max <= 8.
struct GraphCatalog {
    int n_max;
    std::vector<std::vector<Graph>> per_order;  // per_order[k] = graphs of order k+1

    const std::vector<Graph>& of_order(int n) const { return per_order.at(n - 1); }
};

GraphCatalog enumerate_catalog(int n_max);

// Known counts of non-isomorphic simple graphs, order 1..8.
inline const std::vector<long>& known_graph_counts() {
    static const std::vector<long> counts = {1, 2, 4, 11, 34, 156, 1044, 12346};
    return counts;
}

}  // namespace patternforge
