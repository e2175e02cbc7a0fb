#pragma once

#include <optional>
#include <span>
#include <vector>

#include "symbreak/graph.hpp"
#include "symbreak/perm_group.hpp"

namespace symbreak {

// A connected component with optional precomputed data. Missing values are
// computed by enumeration.
struct UnionComponent {
  Graph graph;
  std::optional<std::size_t> theta;
  std::optional<bool> asymmetric;
};

struct UnionSpec {
  std::vector<UnionComponent> components;
};

enum class UnionCase {
  kAllSymmetric,        // every component has a nontrivial automorphism
  kAllAsymmetric,       // every component is asymmetric
  kMixed,               // both kinds, maximum of the two mixed terms
  kMixedAsymmetricRest, // both kinds, asymmetric part rigid and not larger
};

struct UnionTheta {
  std::size_t theta = 0;
  UnionCase which = UnionCase::kAllSymmetric;
};

// nu for a list of asymmetric connected graphs: the order of the smallest
// isomorphism class occurring more than once, else the total vertex count.
std::size_t nu(std::span<const Graph> asymmetric_components);

// Threshold of the disjoint union from per-component data. Throws
// InvalidComponent for a disconnected component and EmptyUnion for no
// components.
UnionTheta union_theta_detailed(const UnionSpec& spec, std::size_t group_cap = kDefaultGroupCap);
std::size_t union_theta(const UnionSpec& spec, std::size_t group_cap = kDefaultGroupCap);

}  // namespace symbreak
