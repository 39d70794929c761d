#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "patterns.hpp"

namespace patternforge {

// One catalog entry: a class name, its forbidden-pattern family, and (when a
// cheap independent test exists) a brute-force oracle for cross-checking.
struct NamedClassEntry {
    std::string name;
    PatternSet pattern_set;
    std::function<bool(const Graph&)> oracle;  // may be empty
    int oracle_n_limit = 0;                    // max order the oracle accepts

    bool has_oracle() const { return static_cast<bool>(oracle); }
};

// The frozen catalog: the classic one-pattern classes, cocomparability,
// permutation, grounded-L, all 16 P_S families, and the four-position
// families with known characterizations (cographs, strongly chordal, coTT,
// queue number 1, perfectly orderable, LMIM-width 1, MIM-width 1,
// 3-colorable, K4-free).
const std::vector<NamedClassEntry>& named_catalog();

const NamedClassEntry* find_named_class(const std::string& name);

// Resolves a CLI selector: a P_S subset string ("b", "ab", "abcd", "empty")
// or a catalog name. Throws std::invalid_argument if neither.
PatternSet resolve_class_selector(const std::string& selector);

// The pattern the grounding order of a touching L-shape representation
// avoids: one position with two later neighbors. Mirror-equivalent to the
// catalog's forest pattern (so it cuts out the same class), but oriented the
// way the construction emits its shapes: children ground before parents.
Pattern forest_grounding_pattern();

}  // namespace patternforge
