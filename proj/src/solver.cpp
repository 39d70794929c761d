#include "solver.hpp"

#include <algorithm>
#include <numeric>

namespace patternforge {

bool avoids_all(const Graph& g, const Ordering& ordering, const PatternSet& F) {
    for (const Pattern& p : F.patterns)
        if (occurs(g, ordering, p)) return false;
    return true;
}

namespace {

struct Search {
    const Graph& g;
    const PatternSet& F;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    std::vector<int> order;   // static branching order
    std::vector<char> used;
    std::vector<int> placed;  // rank -> vertex prefix
    bool out_of_budget = false;

    Search(const Graph& graph, const PatternSet& f, std::uint64_t b) : g(graph), F(f), budget(b) {
        order.resize(static_cast<std::size_t>(g.n()));
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int c) {
            if (g.degree(a) != g.degree(c)) return g.degree(a) > g.degree(c);
            return a < c;
        });
        used.assign(static_cast<std::size_t>(g.n()), 0);
        placed.reserve(static_cast<std::size_t>(g.n()));
    }

    bool dfs() {
        if (static_cast<int>(placed.size()) == g.n()) return true;
        for (int v : order) {
            if (used[static_cast<std::size_t>(v)]) continue;
            if (++nodes > budget) { out_of_budget = true; return false; }
            placed.push_back(v);
            used[static_cast<std::size_t>(v)] = 1;
            bool dead = false;
            int last = static_cast<int>(placed.size()) - 1;
            for (const Pattern& p : F.patterns)
                if (occurs_with_last(g, placed, last, p)) { dead = true; break; }
            if (!dead && dfs()) return true;
            placed.pop_back();
            used[static_cast<std::size_t>(v)] = 0;
            if (out_of_budget) return false;
        }
        return false;
    }
};

}  // namespace

MembershipResult find_avoiding_ordering(const Graph& g, const PatternSet& F, std::uint64_t budget) {
    if (budget == 0) throw std::invalid_argument("find_avoiding_ordering: budget must be positive");
    Search s(g, F, budget);
    MembershipResult r;
    bool found = s.dfs();
    r.nodes_explored = s.nodes;
    if (found) {
        r.verdict = MembershipResult::Verdict::Member;
        r.witness_ordering = Ordering{s.placed};
    } else if (s.out_of_budget) {
        r.verdict = MembershipResult::Verdict::Unknown;
    } else {
        r.verdict = MembershipResult::Verdict::NonMember;
    }
    return r;
}

MembershipResult brute_force_membership(const Graph& g, const PatternSet& F) {
    if (g.n() > 9) throw OrderTooLarge("brute_force_membership: n > 9");
    MembershipResult r;
    std::vector<int> perm(static_cast<std::size_t>(g.n()));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        ++r.nodes_explored;
        Ordering o{perm};
        if (avoids_all(g, o, F)) {
            r.verdict = MembershipResult::Verdict::Member;
            r.witness_ordering = o;
            return r;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    r.verdict = MembershipResult::Verdict::NonMember;
    return r;
}

}  // namespace patternforge
