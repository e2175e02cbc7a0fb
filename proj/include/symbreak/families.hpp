#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symbreak/bigint.hpp"
#include "symbreak/graph.hpp"

namespace symbreak {

enum class FamilyKind { kPath, kCycle, kComplete, kEmpty, kCompleteBipartite };

// Vertex order: paths and cycles follow the natural order 0-1-2-...;
// complete bipartite puts the left block first. Throws InvalidParams on a bad
// size list.
Graph standard_family(FamilyKind kind, std::span<const int> sizes);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph complete_bipartite(int m, int n);

// u ~ v iff (u - v) mod n is in the connection set. Entries must lie in
// 1..n-1 (InvalidConnectionSet) and the set must be closed under negation
// (NotSymmetric).
Graph circulant(int n, std::span<const int> connection_set);

// Outer 7-cycle 0..6; inner vertex 7+i is adjacent to i, i+1 and i+3 mod 7.
Graph figure14_graph();
// Named fixtures: petersen, figure14, g1, g2, g6, g24, g24path, asym6.
// Throws InvalidParams for an unknown name.
Graph named_fixture(std::string_view name);
std::vector<std::string> fixture_names();

// Number of non-equivalent distinguishing colorings of P_n with palette
// {1..k}: (k^n - k^ceil(n/2)) / 2. FormulaInapplicable for n = 1, where the
// single vertex admits k colorings.
BigInt path_Phi_closed_form(std::uint64_t n, std::uint64_t k);
// Same count for K_n: C(k, n).
BigInt complete_Phi_closed_form(std::uint64_t n, std::uint64_t k);

}  // namespace symbreak
