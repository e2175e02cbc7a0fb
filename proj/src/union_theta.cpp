#include "symbreak/union_theta.hpp"

#include <algorithm>

#include "symbreak/autsearch.hpp"
#include "symbreak/distinguishing.hpp"
#include "symbreak/error.hpp"

namespace symbreak {

std::size_t nu(std::span<const Graph> asymmetric_components) {
  std::size_t total = 0;
  std::vector<const Graph*> reps;
  std::vector<std::size_t> mult;
  for (const Graph& g : asymmetric_components) {
    total += g.order();
    std::size_t c = 0;
    for (; c < reps.size(); ++c) {
      const Graph& r = *reps[c];
      if (r.order() == g.order() && r.edge_count() == g.edge_count() && isomorphic(r, g)) break;
    }
    if (c == reps.size()) {
      reps.push_back(&g);
      mult.push_back(0);
    }
    ++mult[c];
  }
  std::size_t best = 0;
  for (std::size_t c = 0; c < reps.size(); ++c) {
    const std::size_t size = reps[c]->order();
    if (mult[c] > 1 && (best == 0 || size < best)) best = size;
  }
  return best == 0 ? total : best;
}

UnionTheta union_theta_detailed(const UnionSpec& spec, std::size_t group_cap) {
  if (spec.components.empty()) throw Error(ErrorKind::kEmptyUnion, "union has no components");

  std::vector<Graph> rigid;
  std::size_t size_a = 0, size_b = 0;
  long long best_excess = 0;  // max over symmetric parts of theta_i - |V_i|
  bool any_a = false;
  for (std::size_t idx = 0; idx < spec.components.size(); ++idx) {
    const UnionComponent& c = spec.components[idx];
    if (!is_connected(c.graph)) {
      throw Error(ErrorKind::kInvalidComponent, "component " + std::to_string(idx) + " is disconnected");
    }
    bool asym;
    if (c.asymmetric) asym = *c.asymmetric;
    else if (c.theta) asym = *c.theta == 1;
    else asym = is_asymmetric(c.graph);

    const std::size_t n = c.graph.order();
    if (asym) {
      rigid.push_back(c.graph);
      size_b += n;
      continue;
    }
    const std::size_t t = c.theta ? *c.theta : theta(c.graph, {group_cap, false}).theta;
    const long long excess = static_cast<long long>(t) - static_cast<long long>(n);
    if (!any_a || excess > best_excess) best_excess = excess;
    any_a = true;
    size_a += n;
  }

  const std::size_t theta_a = any_a ? static_cast<std::size_t>(best_excess + static_cast<long long>(size_a)) : 0;
  if (rigid.empty()) return {theta_a, UnionCase::kAllSymmetric};

  const std::size_t nu_b = nu(rigid);
  const std::size_t theta_b = size_b - nu_b + 1;
  if (!any_a) return {theta_b, UnionCase::kAllAsymmetric};

  const bool b_rigid = nu_b == size_b;
  if (b_rigid && theta_a + size_b <= theta_b + size_a) {
    return {theta_a + size_b, UnionCase::kMixedAsymmetricRest};
  }
  return {std::max(theta_a + size_b, theta_b + size_a), UnionCase::kMixed};
}

std::size_t union_theta(const UnionSpec& spec, std::size_t group_cap) {
  return union_theta_detailed(spec, group_cap).theta;
}

}  // namespace symbreak
