#include "named_classes.hpp"

#include <map>

#include "oracles.hpp"

namespace patternforge {

namespace {

using Pairs = std::vector<std::pair<int, int>>;

Pattern pat(int k, const Pairs& edges, const Pairs& nonedges) {
    return Pattern::from_pairs(k, edges, nonedges);
}

// Three-position patterns of the classic table.
Pattern linear_forest_pattern() { return pat(3, {{1, 3}}, {}); }
Pattern star_pattern() { return pat(3, {{1, 2}}, {}); }
Pattern interval_pattern() { return pat(3, {{1, 3}}, {{1, 2}}); }
Pattern split_pattern() { return pat(3, {{2, 3}}, {{1, 2}}); }
Pattern forest_pattern() { return pat(3, {{1, 3}, {2, 3}}, {}); }
Pattern bipartite_pattern() { return pat(3, {{1, 2}, {2, 3}}, {}); }
Pattern chordal_pattern() { return pat(3, {{1, 3}, {2, 3}}, {{1, 2}}); }
Pattern comparability_pattern() { return pat(3, {{1, 2}, {2, 3}}, {{1, 3}}); }
Pattern triangle_free_pattern() { return pat(3, {{1, 2}, {2, 3}, {1, 3}}, {}); }
Pattern two_node_pattern() { return pat(3, {}, {}); }
Pattern cocomparability_pattern() { return pat(3, {{1, 3}}, {{1, 2}, {2, 3}}); }

NamedClassEntry entry(std::string name, std::vector<Pattern> patterns,
                      std::function<bool(const Graph&)> oracle = nullptr, int oracle_limit = 0) {
    NamedClassEntry e;
    e.name = name;
    e.pattern_set.name = std::move(name);
    e.pattern_set.patterns = std::move(patterns);
    e.oracle = std::move(oracle);
    e.oracle_n_limit = oracle_limit;
    return e;
}

std::vector<NamedClassEntry> build_catalog() {
    std::vector<NamedClassEntry> cat;

    cat.push_back(entry("linear-forest", {linear_forest_pattern()}, oracles::is_linear_forest, 62));
    cat.push_back(entry("star", {star_pattern()}, oracles::is_star_plus_isolated, 62));
    cat.push_back(entry("interval", {interval_pattern()}, oracles::is_interval, 10));
    cat.push_back(entry("split", {split_pattern()}, oracles::is_split, 10));
    cat.push_back(entry("forest", {forest_pattern()}, oracles::is_acyclic, 62));
    cat.push_back(entry("bipartite", {bipartite_pattern()}, oracles::is_bipartite, 62));
    cat.push_back(entry("chordal", {chordal_pattern()}, oracles::is_chordal, 10));
    cat.push_back(entry("comparability", {comparability_pattern()}, oracles::has_transitive_orientation, 6));
    cat.push_back(entry("triangle-free", {triangle_free_pattern()},
                        [](const Graph& g) { return !oracles::has_triangle(g); }, 62));
    cat.push_back(entry("at-most-two-vertices", {two_node_pattern()},
                        [](const Graph& g) { return g.n() <= 2; }, 62));

    cat.push_back(entry("cocomparability", {cocomparability_pattern()}, oracles::is_cocomparability, 6));
    cat.push_back(entry("permutation", {comparability_pattern(), cocomparability_pattern()},
                        oracles::is_permutation_graph, 6));

    // Grounded L-shape graphs: P_ab together with the four-position pattern
    // forbidding edges (1,2),(2,3),(1,4) with (1,3) a non-edge.
    cat.push_back(entry("grounded-L", {make_ps("ab"), pat(4, {{1, 2}, {2, 3}, {1, 4}}, {{1, 3}})}));

    for (const std::string& s : all_ps_subsets()) {
        std::string name = s.empty() ? "empty" : s;
        cat.push_back(entry(name, {make_ps(s)}));
    }

    // Cographs: both self-mirror ordered induced paths on four positions plus
    // the two mixed triples. Exhaustive search shows no set of three patterns
    // on at most four positions cuts out this class, so four entries it is;
    // the set provably matches the induced-path-free test on all graphs.
    cat.push_back(entry("cographs",
                        {pat(4, {{1, 3}, {2, 3}, {2, 4}}, {{1, 2}, {1, 4}, {3, 4}}),
                         pat(4, {{1, 2}, {1, 4}, {3, 4}}, {{1, 3}, {2, 3}, {2, 4}}),
                         comparability_pattern(), cocomparability_pattern()},
                        oracles::is_p4_free, 10));

    cat.push_back(entry("strongly-chordal",
                        {pat(3, {{1, 2}, {1, 3}}, {{2, 3}}),
                         pat(4, {{1, 3}, {1, 4}, {2, 3}, {3, 4}}, {{2, 4}})},
                        oracles::is_strongly_chordal, 7));

    cat.push_back(entry("coTT",
                        {pat(3, {{1, 3}, {2, 3}}, {{1, 2}}),
                         pat(4, {{1, 3}, {1, 4}, {2, 3}, {3, 4}}, {{2, 4}}),
                         pat(4, {{1, 3}, {2, 4}}, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}),
                         pat(4, {{1, 4}, {2, 3}}, {{1, 2}, {1, 3}, {2, 4}, {3, 4}}),
                         pat(4, {{1, 4}, {2, 3}, {3, 4}}, {{1, 2}, {1, 3}, {2, 4}})}));

    cat.push_back(entry("queue-1", {pat(4, {{1, 4}, {2, 3}}, {})}));

    cat.push_back(entry("perfectly-orderable",
                        {pat(4, {{1, 2}, {2, 4}, {3, 4}}, {{1, 3}, {2, 3}, {1, 4}}),
                         pat(4, {{1, 3}, {2, 4}, {3, 4}}, {{1, 2}, {2, 3}, {1, 4}}),
                         pat(4, {{1, 4}, {2, 3}, {3, 4}}, {{1, 2}, {1, 3}, {2, 4}})}));

    cat.push_back(entry("LMIM-1",
                        {make_ps("abcd"), pat(4, {{1, 4}, {2, 3}}, {{1, 2}, {1, 3}, {2, 4}, {3, 4}})}));

    cat.push_back(entry("MIM-1", {make_ps("bd"), pat(4, {{1, 4}, {2, 3}}, {{1, 3}, {2, 4}})}));

    cat.push_back(entry("3-colorable", {pat(4, {{1, 2}, {2, 3}, {3, 4}}, {})}, oracles::is_3colorable, 10));

    cat.push_back(entry("K4-free",
                        {pat(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}, {})},
                        [](const Graph& g) { return !oracles::has_k4(g); }, 62));

    return cat;
}

}  // namespace

const std::vector<NamedClassEntry>& named_catalog() {
    static const std::vector<NamedClassEntry> cat = build_catalog();
    return cat;
}

const NamedClassEntry* find_named_class(const std::string& name) {
    for (const auto& e : named_catalog())
        if (e.name == name) return &e;
    return nullptr;
}

PatternSet resolve_class_selector(const std::string& selector) {
    if (const NamedClassEntry* e = find_named_class(selector)) return e->pattern_set;
    bool subset_like = !selector.empty();
    for (char c : selector)
        if (c < 'a' || c > 'd') subset_like = false;
    if (subset_like || selector == "empty") {
        PatternSet ps;
        ps.name = selector == "empty" ? "empty" : normalize_ps_subset(selector);
        if (ps.name.empty()) ps.name = "empty";
        ps.patterns.push_back(make_ps(selector == "empty" ? "" : selector));
        return ps;
    }
    throw std::invalid_argument("unknown class selector '" + selector + "'");
}

Pattern forest_grounding_pattern() { return Pattern::from_pairs(3, {{1, 2}, {1, 3}}, {}); }

}  // namespace patternforge
