#include "graph.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "json.hpp"

namespace patternforge {

Graph::Graph(int n) : n_(n) {
    if (n < 0 || n > 62) throw std::invalid_argument("Graph: order must be in [0,62]");
    rows_.assign(static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("Graph: self-loop");
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("Graph: endpoint out of range");
    if (adjacent(u, v)) throw std::invalid_argument("Graph: duplicate edge");
    rows_[u] |= (1ull << v);
    rows_[v] |= (1ull << u);
    ++m_;
}

int Graph::degree(int u) const { return __builtin_popcountll(rows_[u]); }

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> es;
    es.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) es.emplace_back(u, v);
    return es;
}

Graph Graph::complement() const {
    Graph c(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!adjacent(u, v)) c.add_edge(u, v);
    return c;
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("relabeled: bad permutation size");
    Graph g(n_);
    for (auto [u, v] : edges()) g.add_edge(perm[u], perm[v]);
    return g;
}

Graph Graph::induced(const std::vector<int>& verts) const {
    Graph g(static_cast<int>(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (adjacent(verts[i], verts[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        for (int u = 0; u < n_; ++u)
            if ((frontier >> u) & 1u) next |= rows_[u];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == ((n_ == 62) ? ~0ull >> 2 : (1ull << n_) - 1);
}

// ---------------------------------------------------------------------------
// graph6

Graph parse_graph6(const std::string& text) {
    std::string s = text;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    if (s.empty()) throw ParseError("graph6: empty input", 0);
    unsigned char first = static_cast<unsigned char>(s[0]);
    if (first < 63 || first > 125) throw ParseError("graph6: order byte out of range (short form only)", 0);
    int n = first - 63;
    std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t nbytes = (nbits + 5) / 6;
    if (s.size() != 1 + nbytes)
        throw ParseError("graph6: expected " + std::to_string(1 + nbytes) + " bytes, got " +
                             std::to_string(s.size()),
                         s.size() < 1 + nbytes ? s.size() : 1 + nbytes);
    std::vector<int> bits;
    bits.reserve(nbytes * 6);
    for (std::size_t i = 0; i < nbytes; ++i) {
        unsigned char c = static_cast<unsigned char>(s[1 + i]);
        if (c < 63 || c > 126) throw ParseError("graph6: data byte out of range", 1 + i);
        int v = c - 63;
        for (int b = 5; b >= 0; --b) bits.push_back((v >> b) & 1);
    }
    for (std::size_t i = nbits; i < bits.size(); ++i)
        if (bits[i]) throw ParseError("graph6: nonzero padding", s.size() - 1);
    Graph g(n);
    std::size_t k = 0;
    std::vector<std::pair<int, int>> es;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (bits[k++]) es.emplace_back(i, j);
    return Graph(n, es);
}

std::string emit_graph6(const Graph& g) {
    int n = g.n();
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    std::vector<int> bits;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j) ? 1 : 0);
    while (bits.size() % 6 != 0) bits.push_back(0);
    for (std::size_t k = 0; k < bits.size(); k += 6) {
        int v = 0;
        for (int b = 0; b < 6; ++b) v |= bits[k + b] << (5 - b);
        out.push_back(static_cast<char>(v + 63));
    }
    return out;
}

// ---------------------------------------------------------------------------
// JSON

Graph parse_graph_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("graph JSON: ") + e.what(), e.byte);
    }
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw ParseError("graph JSON: missing integer field 'n'", 0);
    int n = j["n"].get<int>();
    std::vector<std::pair<int, int>> es;
    if (j.contains("edges")) {
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2) throw ParseError("graph JSON: edge must be a pair", 0);
            es.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
    }
    return Graph(n, es);
}

std::string emit_graph_json(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.n();
    j["edges"] = nlohmann::json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    return j.dump();
}

Graph parse_graph_auto(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '{') return parse_graph_json(text);
        break;
    }
    return parse_graph6(text);
}

// ---------------------------------------------------------------------------
// Canonical form

namespace {

// Upper-triangle bits in column-major (graph6) order for a given relabeling
// prefix are fixed as soon as both endpoints are placed, so the string grows
// by `pos` bits when position `pos` is filled. The search keeps the best
// completed string and prunes any branch whose fixed prefix already exceeds it.
struct CanonSearch {
    const Graph& g;
    int n;
    std::vector<int> place;    // place[pos] = original vertex at position pos
    std::vector<char> used;
    std::string current;       // bits fixed so far, one char per pair
    std::string best;          // seeded with '2' > any bit, so the first leaf wins

    explicit CanonSearch(const Graph& graph) : g(graph), n(graph.n()) {
        place.assign(n, -1);
        used.assign(n, 0);
        current.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
        best.assign(static_cast<std::size_t>(n) * (n - 1) / 2, '2');
    }

    void run() { dfs(0); }

    // Compares the whole fixed prefix against the current best at every node:
    // `best` can shrink mid-loop, which would invalidate any incremental
    // tie-tracking kept across siblings. At n <= 10 the prefix is tiny.
    void dfs(int pos) {
        if (pos == n) {
            if (current < best) best = current;
            return;
        }
        std::size_t base = current.size();
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            used[v] = 1;
            place[pos] = v;
            for (int i = 0; i < pos; ++i) current.push_back(g.adjacent(place[i], v) ? '1' : '0');
            if (best.compare(0, current.size(), current) >= 0) dfs(pos + 1);
            current.resize(base);
            used[v] = 0;
        }
        place[pos] = -1;
    }
};

}  // namespace

std::string canonical_form(const Graph& g) {
    if (g.n() > 10) throw OrderTooLarge("canonical_form: n > 10");
    CanonSearch search(g);
    search.run();
    return std::to_string(g.n()) + ":" + search.best;
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

namespace {

Graph graph_from_canonical(const std::string& canon) {
    auto colon = canon.find(':');
    int n = std::stoi(canon.substr(0, colon));
    std::vector<std::pair<int, int>> es;
    std::size_t k = colon + 1;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (canon[k++] == '1') es.emplace_back(i, j);
    return Graph(n, es);
}

}  // namespace

GraphCatalog enumerate_catalog(int n_max) {
    if (n_max < 1) throw std::invalid_argument("enumerate_catalog: n_max < 1");
    if (n_max > 8) throw OrderTooLarge("enumerate_catalog: n_max > 8");
    GraphCatalog cat;
    cat.n_max = n_max;
    cat.per_order.resize(static_cast<std::size_t>(n_max));
    cat.per_order[0].push_back(Graph(1));
    for (int n = 2; n <= n_max; ++n) {
        std::set<std::string> forms;
        for (const Graph& base : cat.per_order[static_cast<std::size_t>(n - 2)]) {
            auto es = base.edges();
            for (std::uint64_t nb = 0; nb < (1ull << (n - 1)); ++nb) {
                auto aug = es;
                for (int u = 0; u < n - 1; ++u)
                    if ((nb >> u) & 1u) aug.emplace_back(u, n - 1);
                forms.insert(canonical_form(Graph(n, aug)));
            }
        }
        for (const auto& f : forms) cat.per_order[static_cast<std::size_t>(n - 1)].push_back(graph_from_canonical(f));
    }
    return cat;
}

}  // namespace patternforge
