#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"

namespace patternforge {

enum class PairLabel : char { Undecided = 0, Edge = 1, NonEdge = 2 };

// An ordered trigraph on positions 1..k: every position pair carries exactly
// one of the three labels. A vertex ordering of a graph realizes the pattern
// on an increasing rank tuple when every Edge pair is an edge and every
// NonEdge pair is a non-edge of the graph (Undecided pairs are free).
class Pattern {
public:
    explicit Pattern(int k);

    int k() const { return k_; }
    PairLabel label(int i, int j) const { return labels_[index(i, j)]; }
    void set_label(int i, int j, PairLabel l) { labels_[index(i, j)] = l; }

    std::vector<std::pair<int, int>> edge_pairs() const;
    std::vector<std::pair<int, int>> nonedge_pairs() const;

    bool operator==(const Pattern& o) const { return k_ == o.k_ && labels_ == o.labels_; }

    static Pattern from_pairs(int k, const std::vector<std::pair<int, int>>& edges,
                              const std::vector<std::pair<int, int>>& nonedges);

    std::string to_json() const;
    static Pattern from_json(const std::string& text);

private:
    std::size_t index(int i, int j) const;

    int k_;
    std::vector<PairLabel> labels_;
};

struct PatternSet {
    std::vector<Pattern> patterns;
    std::string name;
};

// Pair names for the four-position family: a=(1,2), b=(2,3), c=(3,4), d=(1,4).
// The pattern P_S has edges (1,3),(2,4) and the pairs of S as non-edges.
Pattern make_ps(const std::string& subset);  // subset over letters a..d; "" or "empty" allowed
std::string normalize_ps_subset(const std::string& subset);
std::vector<std::string> all_ps_subsets();   // the 16 subsets, "" first, then by size/lex

// Position reversal i -> k+1-i with labels transported.
Pattern mirror(const Pattern& p);

// True iff k matches, every Edge pair of p is an Edge of q, and every NonEdge
// pair of p is a NonEdge of q. Then every ordering realizing q realizes p.
bool pattern_included(const Pattern& p, const Pattern& q);

// Rank -> vertex permutation of 0..n-1.
struct Ordering {
    std::vector<int> ranks;

    int n() const { return static_cast<int>(ranks.size()); }
    bool is_permutation() const;
    Ordering reversed() const;

    bool operator==(const Ordering& o) const { return ranks == o.ranks; }
};

struct InvalidOrdering : std::runtime_error {
    explicit InvalidOrdering(const std::string& what) : std::runtime_error(what) {}
};

// Lexicographically least increasing tuple of 1-based ranks realizing p in
// (g, ordering), or nullopt. Patterns longer than the graph never occur.
std::optional<std::vector<int>> occurs(const Graph& g, const Ordering& ordering, const Pattern& p);

// Same existence test restricted to tuples whose maximum 0-based rank equals
// `last`, looking only at ranks 0..last of a (possibly partial) placement.
// Used by the solver's incremental prefix check.
bool occurs_with_last(const Graph& g, const std::vector<int>& placed, int last, const Pattern& p);

}  // namespace patternforge
