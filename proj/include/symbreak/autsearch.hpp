#pragma once

#include <cstdint>
#include <vector>

#include "symbreak/coloring.hpp"
#include "symbreak/graph.hpp"
#include "symbreak/perm_group.hpp"

namespace symbreak {

// Ordered partition of the vertices, one bitmask per cell.
using OrderedPartition = std::vector<std::uint64_t>;

// Refines cells in place until every vertex of a cell has the same number of
// neighbours in each cell. A split replaces a cell by its parts ordered by
// ascending neighbour count, so the result commutes with relabelling.
void refine_to_equitable(const Graph& g, OrderedPartition& cells);

// Generators of Aut(g), or of the subgroup preserving the colors when a
// coloring is given. The search individualizes vertices of the first largest
// cell in ascending order; for every level of the leftmost path and every
// alternative vertex it keeps the first automorphism found below it. The
// result is generators only (not enumerated) and is deterministic.
PermGroup automorphism_generators(const Graph& g);
PermGroup automorphism_generators(const Graph& g, const Coloring& colors);

// Enumerated automorphism group; throws GroupTooLarge past cap.
PermGroup automorphism_group(const Graph& g, std::size_t cap = kDefaultGroupCap);

bool is_automorphism(const Graph& g, std::span<const std::uint8_t> images);
bool is_asymmetric(const Graph& g);
bool isomorphic(const Graph& g, const Graph& h);

}  // namespace symbreak
