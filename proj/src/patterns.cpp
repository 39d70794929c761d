#include "patterns.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

namespace patternforge {

Pattern::Pattern(int k) : k_(k) {
    if (k < 2) throw std::invalid_argument("Pattern: k >= 2 required");
    labels_.assign(static_cast<std::size_t>(k) * (k - 1) / 2, PairLabel::Undecided);
}

std::size_t Pattern::index(int i, int j) const {
    if (i > j) std::swap(i, j);
    if (i < 1 || j > k_ || i == j) throw std::out_of_range("Pattern: bad position pair");
    // Row-major over pairs (i,j), 1 <= i < j <= k.
    int before = (i - 1) * k_ - (i - 1) * i / 2;
    return static_cast<std::size_t>(before + (j - i - 1));
}

std::vector<std::pair<int, int>> Pattern::edge_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= k_; ++i)
        for (int j = i + 1; j <= k_; ++j)
            if (label(i, j) == PairLabel::Edge) out.emplace_back(i, j);
    return out;
}

std::vector<std::pair<int, int>> Pattern::nonedge_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= k_; ++i)
        for (int j = i + 1; j <= k_; ++j)
            if (label(i, j) == PairLabel::NonEdge) out.emplace_back(i, j);
    return out;
}

Pattern Pattern::from_pairs(int k, const std::vector<std::pair<int, int>>& edges,
                            const std::vector<std::pair<int, int>>& nonedges) {
    Pattern p(k);
    for (auto [i, j] : edges) p.set_label(i, j, PairLabel::Edge);
    for (auto [i, j] : nonedges) {
        if (p.label(i, j) == PairLabel::Edge) throw std::invalid_argument("Pattern: pair labeled twice");
        p.set_label(i, j, PairLabel::NonEdge);
    }
    return p;
}

std::string Pattern::to_json() const {
    nlohmann::json j;
    j["k"] = k_;
    j["edge"] = nlohmann::json::array();
    j["nonedge"] = nlohmann::json::array();
    for (auto [a, b] : edge_pairs()) j["edge"].push_back({a, b});
    for (auto [a, b] : nonedge_pairs()) j["nonedge"].push_back({a, b});
    return j.dump();
}

Pattern Pattern::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Pattern p(j.at("k").get<int>());
    if (j.contains("edge"))
        for (const auto& e : j["edge"]) p.set_label(e[0].get<int>(), e[1].get<int>(), PairLabel::Edge);
    if (j.contains("nonedge"))
        for (const auto& e : j["nonedge"]) {
            if (p.label(e[0].get<int>(), e[1].get<int>()) == PairLabel::Edge)
                throw std::invalid_argument("Pattern JSON: pair in both lists");
            p.set_label(e[0].get<int>(), e[1].get<int>(), PairLabel::NonEdge);
        }
    return p;
}

std::string normalize_ps_subset(const std::string& subset) {
    if (subset == "empty") return "";
    std::set<char> letters;
    for (char c : subset) {
        if (c < 'a' || c > 'd') throw std::invalid_argument("P_S subset: letters a-d only, got '" + subset + "'");
        letters.insert(c);
    }
    return std::string(letters.begin(), letters.end());
}

Pattern make_ps(const std::string& subset) {
    static const std::vector<std::pair<int, int>> pair_of = {
        {1, 2},  // a
        {2, 3},  // b
        {3, 4},  // c
        {1, 4},  // d
    };
    Pattern p(4);
    p.set_label(1, 3, PairLabel::Edge);
    p.set_label(2, 4, PairLabel::Edge);
    for (char c : normalize_ps_subset(subset)) {
        auto [i, j] = pair_of[static_cast<std::size_t>(c - 'a')];
        p.set_label(i, j, PairLabel::NonEdge);
    }
    return p;
}

std::vector<std::string> all_ps_subsets() {
    std::vector<std::string> out;
    const std::string letters = "abcd";
    for (int mask = 0; mask < 16; ++mask) {
        std::string s;
        for (int b = 0; b < 4; ++b)
            if (mask & (1 << b)) s.push_back(letters[static_cast<std::size_t>(b)]);
        out.push_back(s);
    }
    std::sort(out.begin(), out.end(), [](const std::string& x, const std::string& y) {
        return std::make_pair(x.size(), x) < std::make_pair(y.size(), y);
    });
    return out;
}

Pattern mirror(const Pattern& p) {
    Pattern m(p.k());
    for (int i = 1; i <= p.k(); ++i)
        for (int j = i + 1; j <= p.k(); ++j)
            m.set_label(p.k() + 1 - j, p.k() + 1 - i, p.label(i, j));
    return m;
}

bool pattern_included(const Pattern& p, const Pattern& q) {
    if (p.k() != q.k()) return false;
    for (int i = 1; i <= p.k(); ++i)
        for (int j = i + 1; j <= p.k(); ++j) {
            PairLabel lp = p.label(i, j);
            if (lp != PairLabel::Undecided && q.label(i, j) != lp) return false;
        }
    return true;
}

bool Ordering::is_permutation() const {
    std::vector<char> seen(ranks.size(), 0);
    for (int v : ranks) {
        if (v < 0 || v >= n() || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = 1;
    }
    return true;
}

Ordering Ordering::reversed() const {
    Ordering o = *this;
    std::reverse(o.ranks.begin(), o.ranks.end());
    return o;
}

namespace {

// Depth-first enumeration of increasing rank tuples in lexicographic order,
// checking each pair label as soon as both members are chosen.
bool occurs_rec(const Graph& g, const std::vector<int>& ranks, const Pattern& p, int pos,
                std::vector<int>& chosen, int from) {
    int k = p.k();
    if (pos == k) return true;
    int n = static_cast<int>(ranks.size());
    for (int r = from; r <= n - (k - pos); ++r) {
        bool ok = true;
        for (int q = 0; q < pos; ++q) {
            PairLabel l = p.label(q + 1, pos + 1);
            if (l == PairLabel::Undecided) continue;
            bool adj = g.adjacent(ranks[static_cast<std::size_t>(chosen[static_cast<std::size_t>(q)])],
                                  ranks[static_cast<std::size_t>(r)]);
            if ((l == PairLabel::Edge) != adj) { ok = false; break; }
        }
        if (!ok) continue;
        chosen[static_cast<std::size_t>(pos)] = r;
        if (occurs_rec(g, ranks, p, pos + 1, chosen, r + 1)) return true;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> occurs(const Graph& g, const Ordering& ordering, const Pattern& p) {
    if (ordering.n() != g.n() || !ordering.is_permutation())
        throw InvalidOrdering("occurs: ordering is not a permutation of the vertex set");
    if (p.k() > g.n()) return std::nullopt;
    std::vector<int> chosen(static_cast<std::size_t>(p.k()));
    if (!occurs_rec(g, ordering.ranks, p, 0, chosen, 0)) return std::nullopt;
    std::vector<int> witness;
    witness.reserve(chosen.size());
    for (int r : chosen) witness.push_back(r + 1);  // 1-based ranks
    return witness;
}

namespace {

// Positions 1..k-1 of the pattern range over ranks < last; position k is
// pinned to `last`. Every pair label is checked as soon as both ranks are
// fixed, including the pair against the pinned final position.
bool occurs_last_rec(const Graph& g, const std::vector<int>& placed, int last, const Pattern& p, int pos,
                     std::vector<int>& chosen, int from) {
    int k = p.k();
    if (pos == k - 1) return true;
    for (int r = from; r <= last - (k - 1 - pos); ++r) {
        int v = placed[static_cast<std::size_t>(r)];
        PairLabel lk = p.label(pos + 1, k);
        if (lk != PairLabel::Undecided &&
            (lk == PairLabel::Edge) != g.adjacent(v, placed[static_cast<std::size_t>(last)]))
            continue;
        bool ok = true;
        for (int q = 0; q < pos; ++q) {
            PairLabel l = p.label(q + 1, pos + 1);
            if (l == PairLabel::Undecided) continue;
            bool adj = g.adjacent(placed[static_cast<std::size_t>(chosen[static_cast<std::size_t>(q)])], v);
            if ((l == PairLabel::Edge) != adj) { ok = false; break; }
        }
        if (!ok) continue;
        chosen[static_cast<std::size_t>(pos)] = r;
        if (occurs_last_rec(g, placed, last, p, pos + 1, chosen, r + 1)) return true;
    }
    return false;
}

}  // namespace

bool occurs_with_last(const Graph& g, const std::vector<int>& placed, int last, const Pattern& p) {
    if (p.k() - 1 > last) return false;
    std::vector<int> chosen(static_cast<std::size_t>(p.k()));
    return occurs_last_rec(g, placed, last, p, 0, chosen, 0);
}

}  // namespace patternforge
