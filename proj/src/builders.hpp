#pragma once

#include "representation.hpp"

namespace patternforge {

struct NotAForest : std::runtime_error {
    NotAForest() : std::runtime_error("input graph is not a forest") {}
};

struct OrderingNotAvoiding : std::runtime_error {
    explicit OrderingNotAvoiding(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a proof-impossible branch is reached or a builder fails its own
// output verification. Always a bug, never a user error.
struct InternalContradiction : std::logic_error {
    explicit InternalContradiction(const std::string& what) : std::logic_error(what) {}
};

// Touching L-shape representation of a forest. Top-down per tree, one unit
// square per component, components placed side by side on the line.
Representation build_touching_lshapes(const Graph& g);

// Touching diagonal-rectangle representation from an ordering avoiding the
// four-position pattern with crossing edges (1,3),(2,4). Rank t grounds at
// abscissa t; corners come from the diagonals of the extreme neighbors.
Representation build_touching_rectangles(const Graph& g, const Ordering& sigma);

// Interval filament representation from an ordering avoiding that pattern
// plus non-edge (1,2): square filaments, then spikes up to the highest missed
// left neighbor, then chimneys lifting non-neighbor plateaus over each spike.
Representation build_interval_filaments(const Graph& g, const Ordering& sigma);

// Grounded stairs representation from an ordering avoiding the pattern with
// non-edges (1,2),(2,3): plant vertical rays left to right, extend earlier
// neighbors rightward, climbing over every blocking non-neighbor column.
Representation build_grounded_stairs(const Graph& g, const Ordering& sigma);

}  // namespace patternforge
