#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "symbreak/bigint.hpp"
#include "symbreak/graph.hpp"
#include "symbreak/permutation.hpp"

namespace symbreak {

// Generalized Johnson graph J(n,k,i): k-subsets of {1..n}, adjacent when they
// share exactly k - i elements. Requires 2 <= 2k <= n and 1 <= i <= k.
struct JohnsonParams {
  int n = 0;
  int k = 0;
  int i = 0;
};

// Throws InvalidParams.
void validate(const JohnsonParams& p);

// Subset of {1..n}; element e is bit e - 1.
using Subset = std::uint64_t;

Subset make_subset(std::initializer_list<int> elements);
std::vector<int> subset_elements(Subset s);
std::string subset_to_string(Subset s);

// All k-subsets of {1..n} in colexicographic order, which is the increasing
// order of their bitmasks. Vertex v of J(n,k,i) is entry v.
std::vector<Subset> k_subsets_colex(int n, int k);
// Position of s in k_subsets_colex(n, |s|).
int colex_rank(Subset s);

Graph generalized_johnson(const JohnsonParams& p);
Graph kneser(int n, int k);

// Closed forms. For k = 1 the graph is K_n and all three follow K_n.
BigInt johnson_theta(const JohnsonParams& p);
BigInt johnson_D(const JohnsonParams& p);
BigInt johnson_aut_order(const JohnsonParams& p);
// 'a'..'g' per the automorphism-group classification; '-' for k = 1.
char aut_order_case(const JohnsonParams& p);

// Vertex map of J(n,k,i) induced by a permutation of {1..n} (points 0..n-1).
Permutation natural_automorphism(const Permutation& beta, const JohnsonParams& p);

// Action of Sym(n+1) when k = (n-1)/2 and i = (k+1)/2; any other parameters
// throw NotApplicable. sigma acts on n+1 points where point e-1 is element e
// and point n is the extra point. X and its complement (with the extra point
// added to X) are both moved by sigma; the image is the moved part holding
// the extra point, with it removed.
Subset sym_np1_image(const Permutation& sigma, Subset x, const JohnsonParams& p);
Permutation sym_np1_automorphism(const Permutation& sigma, const JohnsonParams& p);

}  // namespace symbreak
