#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "graph.hpp"

using namespace patternforge;

namespace {

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph(n, es);
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return Graph(n, es);
}

}  // namespace

TEST_SUITE_BEGIN("graph");

TEST_CASE("graph6 decodes the five-vertex star") {
    // 'D' encodes order 5; '?' and '{' give bits 000000 111100, i.e. exactly
    // the pairs (0,4),(1,4),(2,4),(3,4). Decoded by hand from the format and
    // cross-checked against an independent decoder.
    Graph g = parse_graph6("D?{");
    CHECK(g.n() == 5);
    CHECK(g.edge_count() == 4);
    for (int u = 0; u < 4; ++u) {
        CHECK(g.adjacent(u, 4));
        for (int v = u + 1; v < 4; ++v) CHECK(!g.adjacent(u, v));
    }
}

TEST_CASE("graph6 minimal and complete cases") {
    Graph one = parse_graph6("@");
    CHECK(one.n() == 1);
    CHECK(one.edge_count() == 0);

    Graph k4 = parse_graph6("C~");  // bitstring 111111
    CHECK(k4.n() == 4);
    CHECK(k4.edge_count() == 6);
}

TEST_CASE("graph6 malformed inputs carry byte offsets") {
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("D?"), ParseError);      // truncated
    CHECK_THROWS_AS(parse_graph6("D?{?"), ParseError);    // trailing junk
    CHECK_THROWS_AS(parse_graph6(std::string(1, '\x10')), ParseError);
    try {
        parse_graph6("C\x05");
    } catch (const ParseError& e) {
        CHECK(e.byte_offset == 1);
    }
}

TEST_CASE("graph6 round-trips over the small catalog") {
    GraphCatalog cat = enumerate_catalog(6);
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : cat.of_order(n)) CHECK(parse_graph6(emit_graph6(g)) == g);
}

TEST_CASE("edge-list JSON round-trips") {
    Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    Graph back = parse_graph_json(emit_graph_json(g));
    CHECK(back == g);
    CHECK(parse_graph_auto(emit_graph_json(g)) == g);
    CHECK(parse_graph_auto(emit_graph6(g)) == g);
}

TEST_CASE("graph invariants are enforced") {
    CHECK_THROWS(Graph(3, {{0, 0}}));
    CHECK_THROWS(Graph(3, {{0, 3}}));
    CHECK_THROWS(Graph(3, {{0, 1}, {1, 0}}));
}

TEST_CASE("canonical form identifies isomorphic relabelings") {
    Graph p3a(3, {{0, 1}, {1, 2}});
    Graph p3b(3, {{1, 0}, {0, 2}});  // path 1-0-2
    CHECK(canonical_form(p3a) == canonical_form(p3b));

    Graph k3 = complete_graph(3);
    CHECK(canonical_form(k3) != canonical_form(p3a));

    Graph path_0123 = path_graph(4);
    Graph path_0213(4, {{0, 2}, {2, 1}, {1, 3}});
    CHECK(canonical_form(path_0123) == canonical_form(path_0213));

    CHECK_THROWS_AS(canonical_form(Graph(11)), OrderTooLarge);
}

TEST_CASE("canonical form is invariant under random relabelings") {
    std::mt19937 rng(12345);
    GraphCatalog cat = enumerate_catalog(6);
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : cat.of_order(n)) {
            std::string canon = canonical_form(g);
            std::vector<int> perm(static_cast<std::size_t>(n));
            std::iota(perm.begin(), perm.end(), 0);
            for (int t = 0; t < 100; ++t) {
                std::shuffle(perm.begin(), perm.end(), rng);
                REQUIRE(canonical_form(g.relabeled(perm)) == canon);
            }
        }
    }
}

TEST_CASE("catalog counts match the known sequence") {
    GraphCatalog cat = enumerate_catalog(5);
    CHECK(cat.of_order(1).size() == 1);
    CHECK(cat.of_order(2).size() == 2);
    CHECK(cat.of_order(3).size() == 4);
    CHECK(cat.of_order(4).size() == 11);
    CHECK(cat.of_order(5).size() == 34);
    CHECK_THROWS_AS(enumerate_catalog(9), OrderTooLarge);
}

TEST_CASE("the full supported catalog enumerates and round-trips") {
    GraphCatalog cat = enumerate_catalog(8);
    for (int n = 1; n <= 8; ++n) {
        CHECK(static_cast<long>(cat.of_order(n).size()) ==
              known_graph_counts()[static_cast<std::size_t>(n - 1)]);
        for (const Graph& g : cat.of_order(n)) REQUIRE(parse_graph6(emit_graph6(g)) == g);
    }
}

TEST_CASE("catalog graphs of equal order are pairwise non-isomorphic") {
    GraphCatalog cat = enumerate_catalog(5);
    for (int n = 1; n <= 5; ++n) {
        const auto& graphs = cat.of_order(n);
        for (std::size_t i = 0; i < graphs.size(); ++i)
            for (std::size_t j = i + 1; j < graphs.size(); ++j)
                CHECK(!isomorphic(graphs[i], graphs[j]));
    }
}

TEST_SUITE_END();
