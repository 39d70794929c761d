#pragma once

#include <cstdint>
#include <optional>

#include "patterns.hpp"

namespace patternforge {

constexpr std::uint64_t kDefaultSearchBudget = 100'000'000;

struct MembershipResult {
    enum class Verdict { Member, NonMember, Unknown };

    Verdict verdict = Verdict::Unknown;
    std::optional<Ordering> witness_ordering;
    std::uint64_t nodes_explored = 0;

    bool member() const { return verdict == Verdict::Member; }
    bool decided() const { return verdict != Verdict::Unknown; }
};

// True iff no pattern of F occurs in (g, ordering).
bool avoids_all(const Graph& g, const Ordering& ordering, const PatternSet& F);

// Backtracking search over ordering prefixes. A prefix dies as soon as some
// pattern of F is realized among the placed ranks; occurrences persist under
// extension, so this prunes soundly. Vertices are tried in descending degree,
// ties by ascending id. Verdict::Unknown is returned only on budget
// exhaustion and is never conflated with a completed negative answer.
MembershipResult find_avoiding_ordering(const Graph& g, const PatternSet& F,
                                        std::uint64_t budget = kDefaultSearchBudget);

// Full n! scan in lexicographic vertex-id order; first avoiding ordering is
// the witness. n <= 9.
MembershipResult brute_force_membership(const Graph& g, const PatternSet& F);

}  // namespace patternforge
