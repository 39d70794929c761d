#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "named_classes.hpp"
#include "patterns.hpp"

using namespace patternforge;

TEST_SUITE_BEGIN("patterns");

TEST_CASE("the crossing family labels its pairs as expected") {
    Pattern pb = make_ps("b");
    CHECK(pb.k() == 4);
    CHECK(pb.label(1, 3) == PairLabel::Edge);
    CHECK(pb.label(2, 4) == PairLabel::Edge);
    CHECK(pb.label(2, 3) == PairLabel::NonEdge);
    CHECK(pb.label(1, 2) == PairLabel::Undecided);
    CHECK(pb.label(3, 4) == PairLabel::Undecided);
    CHECK(pb.label(1, 4) == PairLabel::Undecided);

    Pattern pempty = make_ps("");
    CHECK(pempty.nonedge_pairs().empty());
    CHECK(pempty.edge_pairs() == std::vector<std::pair<int, int>>{{1, 3}, {2, 4}});
    CHECK(make_ps("empty") == pempty);

    Pattern pabcd = make_ps("abcd");
    CHECK(pabcd.nonedge_pairs() == std::vector<std::pair<int, int>>{{1, 2}, {1, 4}, {2, 3}, {3, 4}});

    CHECK(make_ps("ba") == make_ps("ab"));
    CHECK_THROWS(make_ps("xyz"));
}

TEST_CASE("mirroring transports labels across the reversal") {
    CHECK(mirror(make_ps("a")) == make_ps("c"));
    CHECK(mirror(make_ps("b")) == make_ps("b"));
    CHECK(mirror(make_ps("ad")) == make_ps("cd"));

    Pattern interval = Pattern::from_pairs(3, {{1, 3}}, {{1, 2}});
    Pattern mirrored = Pattern::from_pairs(3, {{1, 3}}, {{2, 3}});
    CHECK(mirror(interval) == mirrored);
    CHECK(mirror(mirror(interval)) == interval);
}

TEST_CASE("pattern inclusion follows label containment") {
    CHECK(pattern_included(make_ps("a"), make_ps("ab")));
    CHECK(!pattern_included(make_ps("ab"), make_ps("a")));
    CHECK(!pattern_included(make_ps("b"), make_ps("a")));
    CHECK(pattern_included(make_ps(""), make_ps("abcd")));
    // Different lengths never compare.
    CHECK(!pattern_included(Pattern::from_pairs(3, {{1, 3}}, {}), make_ps("a")));
}

TEST_CASE("pattern JSON round-trips") {
    Pattern p = make_ps("bd");
    CHECK(Pattern::from_json(p.to_json()) == p);
    Pattern q = Pattern::from_json(R"({"k":3,"edge":[[1,3]],"nonedge":[[1,2]]})");
    CHECK(q.label(1, 3) == PairLabel::Edge);
    CHECK(q.label(1, 2) == PairLabel::NonEdge);
    CHECK(q.label(2, 3) == PairLabel::Undecided);
    CHECK_THROWS(Pattern::from_json(R"({"k":3,"edge":[[1,2]],"nonedge":[[1,2]]})"));
}

TEST_CASE("occurrence scanning finds the least witness") {
    Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    Ordering id{{0, 1, 2, 3}};
    auto w = occurs(k4, id, make_ps(""));
    REQUIRE(w.has_value());
    CHECK(*w == std::vector<int>{1, 2, 3, 4});

    // A path ordered along itself has no realization of the triple with edge
    // (1,3) and non-edge (1,2): the only spread pair is a non-edge.
    Graph p3(3, {{0, 1}, {1, 2}});
    Pattern interval = Pattern::from_pairs(3, {{1, 3}}, {{1, 2}});
    CHECK(!occurs(p3, Ordering{{0, 1, 2}}, interval).has_value());

    Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK(!occurs(c4, Ordering{{0, 1, 2, 3}}, make_ps("")).has_value());
    auto wc = occurs(c4, Ordering{{0, 2, 1, 3}}, make_ps(""));
    REQUIRE(wc.has_value());
    CHECK(*wc == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("patterns longer than the graph never occur") {
    Graph k2(2, {{0, 1}});
    CHECK(!occurs(k2, Ordering{{0, 1}}, make_ps("abcd")).has_value());
    CHECK(!occurs(k2, Ordering{{0, 1}}, Pattern::from_pairs(3, {}, {})).has_value());
    // The all-undecided triple occurs in any ordering of any larger graph.
    Graph e3(3);
    CHECK(occurs(e3, Ordering{{0, 1, 2}}, Pattern::from_pairs(3, {}, {})).has_value());
}

TEST_CASE("occurs validates the ordering") {
    Graph g(3, {{0, 1}});
    CHECK_THROWS_AS(occurs(g, Ordering{{0, 1}}, make_ps("")), InvalidOrdering);
    CHECK_THROWS_AS(occurs(g, Ordering{{0, 1, 1}}, make_ps("")), InvalidOrdering);
}

TEST_CASE("occurrence is monotone under pattern inclusion and mirrors under reversal") {
    GraphCatalog cat = enumerate_catalog(5);
    std::vector<std::string> subsets = all_ps_subsets();
    for (int n = 4; n <= 5; ++n) {
        for (const Graph& g : cat.of_order(n)) {
            std::vector<int> ranks(static_cast<std::size_t>(n));
            std::iota(ranks.begin(), ranks.end(), 0);
            // A deterministic handful of orderings per graph.
            for (int rot = 0; rot < n; ++rot) {
                std::rotate(ranks.begin(), ranks.begin() + 1, ranks.end());
                Ordering o{ranks};
                for (const std::string& s : subsets) {
                    Pattern p = make_ps(s);
                    bool occ = occurs(g, o, p).has_value();
                    for (const std::string& t : subsets) {
                        Pattern q = make_ps(t);
                        if (pattern_included(p, q) && occurs(g, o, q).has_value())
                            CHECK(occurs(g, o, p).has_value());
                    }
                    CHECK(occ == occurs(g, o.reversed(), mirror(p)).has_value());
                }
            }
        }
    }
}

TEST_SUITE_END();
