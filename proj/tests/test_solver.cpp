#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "hierarchy.hpp"
#include "named_classes.hpp"
#include "solver.hpp"

using namespace patternforge;

namespace {

PatternSet single(const std::string& subset) {
    PatternSet ps;
    ps.name = subset.empty() ? "empty" : subset;
    ps.patterns.push_back(make_ps(subset));
    return ps;
}

Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    es.emplace_back(0, n - 1);
    return Graph(n, es);
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return Graph(n, es);
}

}  // namespace

TEST_SUITE_BEGIN("solver");

TEST_CASE("the known avoiding ordering of the 8-vertex witness checks out") {
    const SeparatingFixture& f = separating_fixtures()[0];
    REQUIRE(f.known_avoiding.has_value());
    CHECK(avoids_all(f.graph, *f.known_avoiding, single("ab")));
}

TEST_CASE("avoids_all trivia") {
    Graph k2(2, {{0, 1}});
    CHECK(avoids_all(k2, Ordering{{0, 1}}, single("abcd")));
    CHECK(avoids_all(k2, Ordering{{1, 0}}, single("")));

    Graph k4 = complete_graph(4);
    CHECK(!avoids_all(k4, Ordering{{0, 1, 2, 3}}, single("")));

    CHECK_THROWS_AS(avoids_all(k4, Ordering{{0, 1, 2, 2}}, single("")), InvalidOrdering);
}

TEST_CASE("pruned search on the 8-vertex witness") {
    const SeparatingFixture& f = separating_fixtures()[0];

    MembershipResult in_ab = find_avoiding_ordering(f.graph, single("ab"));
    CHECK(in_ab.member());
    REQUIRE(in_ab.witness_ordering.has_value());
    CHECK(avoids_all(f.graph, *in_ab.witness_ordering, single("ab")));

    MembershipResult in_a = find_avoiding_ordering(f.graph, single("a"));
    CHECK(in_a.verdict == MembershipResult::Verdict::NonMember);
    MembershipResult in_b = find_avoiding_ordering(f.graph, single("b"));
    CHECK(in_b.verdict == MembershipResult::Verdict::NonMember);
}

TEST_CASE("edgeless graphs come back with the identity witness") {
    Graph e5(5);
    MembershipResult r = find_avoiding_ordering(e5, single(""));
    REQUIRE(r.member());
    CHECK(r.witness_ordering->ranks == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("budget exhaustion is a distinct third outcome") {
    const SeparatingFixture& f = separating_fixtures()[0];
    MembershipResult r = find_avoiding_ordering(f.graph, single("a"), 5);
    CHECK(r.verdict == MembershipResult::Verdict::Unknown);
    CHECK(r.nodes_explored >= 5);
    CHECK_THROWS(find_avoiding_ordering(f.graph, single("a"), 0));
}

TEST_CASE("brute force matches the classic small separations") {
    Graph c4 = cycle_graph(4);
    CHECK(brute_force_membership(c4, single("")).member());

    Graph k4 = complete_graph(4);
    CHECK(!brute_force_membership(k4, single("")).member());
    CHECK(brute_force_membership(k4, single("a")).member());
    CHECK(brute_force_membership(k4, single("b")).member());

    Graph c6 = cycle_graph(6);
    CHECK(!brute_force_membership(c6, resolve_class_selector("cocomparability")).member());

    CHECK_THROWS_AS(brute_force_membership(Graph(10), single("")), OrderTooLarge);
}

TEST_CASE("witnesses returned by brute force avoid the family") {
    GraphCatalog cat = enumerate_catalog(5);
    for (const Graph& g : cat.of_order(5)) {
        MembershipResult r = brute_force_membership(g, single("b"));
        if (r.member()) CHECK(avoids_all(g, *r.witness_ordering, single("b")));
    }
}

TEST_CASE("pruned search and brute force agree on the small catalog") {
    GraphCatalog cat = enumerate_catalog(5);
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : cat.of_order(n))
            for (const std::string& s : all_ps_subsets()) {
                MembershipResult fast = find_avoiding_ordering(g, single(s));
                MembershipResult slow = brute_force_membership(g, single(s));
                REQUIRE(fast.decided());
                CHECK(fast.member() == slow.member());
            }
}

TEST_CASE("mirror classes coincide on the small catalog") {
    GraphCatalog cat = enumerate_catalog(5);
    for (int n = 4; n <= 5; ++n)
        for (const Graph& g : cat.of_order(n))
            for (const std::string& s : all_ps_subsets()) {
                PatternSet mirrored;
                mirrored.patterns.push_back(mirror(make_ps(s)));
                CHECK(find_avoiding_ordering(g, single(s)).member() ==
                      find_avoiding_ordering(g, mirrored).member());
            }
}

TEST_SUITE_END();
