#include "symbreak/distinguishing.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "symbreak/autsearch.hpp"
#include "symbreak/error.hpp"

namespace symbreak {

namespace {

bool is_prime(std::uint64_t x) {
  if (x < 2) return false;
  for (std::uint64_t d = 2; d * d <= x; ++d) {
    if (x % d == 0) return false;
  }
  return true;
}

PermGroup enumerate(const Graph& g, std::size_t cap) { return automorphism_group(g, cap); }

void check_budget(std::uint64_t k, int n, std::uint64_t budget) {
  if (power(k, static_cast<std::uint64_t>(n)) > budget) {
    throw Error(ErrorKind::kSearchBudgetExceeded,
                std::to_string(k) + "^" + std::to_string(n) +
                    " colorings exceed the coloring budget of " + std::to_string(budget),
                budget);
  }
}

// Splits the distinguishing colorings over {1..k} into Aut-orbits. With
// surjective_only, colorings missing a color are skipped.
BigInt count_orbits(const Graph& g, const PermGroup& group, std::uint64_t k, bool surjective_only,
                    std::uint64_t budget) {
  const int n = g.order();
  check_budget(k, n, budget);
  std::set<std::vector<std::uint8_t>> representatives;
  std::uint64_t distinguishing = 0;
  std::vector<int> digits(n, 1);
  std::vector<std::vector<std::uint8_t>> images(group.order(), std::vector<std::uint8_t>(n));
  while (true) {
    Coloring c(digits, static_cast<int>(k));
    if ((!surjective_only || c.surjective()) && is_distinguishing(g, c)) {
      ++distinguishing;
      for (std::size_t i = 0; i < group.order(); ++i) {
        const auto alpha = group.element_images(i);
        for (int v = 0; v < n; ++v) images[i][v] = static_cast<std::uint8_t>(digits[alpha[v]]);
      }
      std::sort(images.begin(), images.end());
      if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
        throw std::logic_error("distinguishing coloring with a nontrivial stabilizer");
      }
      representatives.insert(images.front());
    }
    int pos = n - 1;
    while (pos >= 0 && digits[pos] == static_cast<int>(k)) digits[pos--] = 1;
    if (pos < 0) break;
    ++digits[pos];
  }
  if (distinguishing != representatives.size() * group.order()) {
    throw std::logic_error("orbit sizes do not all equal |Aut(G)|");
  }
  return representatives.size();
}

}  // namespace

ThresholdResult threshold_of_group(const PermGroup& group, bool check_unrestricted) {
  ThresholdResult result;
  std::size_t best = 0;
  std::size_t best_composite = 0;
  std::size_t best_index = 0;
  // Element 0 is the identity.
  for (std::size_t i = 1; i < group.order(); ++i) {
    const auto images = group.element_images(i);
    const bool prime = is_prime(detail::order(images));
    if (!prime && !check_unrestricted) continue;
    const std::size_t c = detail::raw_cycle_count(images);
    if (!prime) {
      best_composite = std::max(best_composite, c);
    } else if (c > best) {
      best = c;
      best_index = i;
    }
  }
  // Every maximizer must have prime order, so composite elements stay below.
  if (check_unrestricted && best_composite >= best && best_composite > 0) {
    throw std::logic_error("cycle-count maximum attained by a composite-order element");
  }
  if (best == 0) return result;
  result.theta = best + 1;
  result.witness = group.element(best_index);
  result.witness_order = detail::order(group.element_images(best_index));
  if (!is_prime(result.witness_order)) throw std::logic_error("threshold witness has composite order");
  return result;
}

ThresholdResult theta(const Graph& g, const ThresholdOptions& options) {
  return threshold_of_group(enumerate(g, options.group_cap), options.check_unrestricted);
}

MotionResult motion_of_group(const PermGroup& group) {
  if (group.order() < 2) throw Error(ErrorKind::kNoSymmetry, "motion is undefined for a trivial group");
  std::size_t best = static_cast<std::size_t>(group.degree()) + 1;
  std::size_t best_index = 0;
  for (std::size_t i = 1; i < group.order(); ++i) {
    const std::size_t m = detail::moved_points(group.element_images(i));
    if (m < best) {
      best = m;
      best_index = i;
    }
  }
  return {best, group.element(best_index)};
}

MotionResult motion(const Graph& g, std::size_t group_cap) {
  return motion_of_group(enumerate(g, group_cap));
}

bool motion_bound_check(const Graph& g, std::size_t group_cap) {
  const PermGroup group = enumerate(g, group_cap);
  const MotionResult m = motion_of_group(group);
  const std::size_t t = threshold_of_group(group).theta;
  return t + m.motion >= static_cast<std::size_t>(g.order()) + 2;
}

bool is_distinguishing(const Graph& g, const Coloring& c) {
  return automorphism_generators(g, c).generators().empty();
}

DistinguishingSearch find_distinguishing_coloring(const Graph& g, std::uint64_t budget) {
  const int n = g.order();
  DistinguishingSearch result;
  std::vector<int> colors(n, 1);
  for (int k = 1; k <= n; ++k) {
    // Restricted growth strings over 1..k that use all k colors.
    bool found = false;
    auto visit = [&](auto&& self, int pos, int used) -> void {
      if (found) return;
      if (used + (n - pos) < k) return;
      if (pos == n) {
        if (++result.candidates > budget) {
          throw Error(ErrorKind::kSearchBudgetExceeded,
                      "distinguishing-number search exceeded the budget of " +
                          std::to_string(budget) + " colorings",
                      budget);
        }
        Coloring c(colors, k);
        if (is_distinguishing(g, c)) {
          found = true;
          result.number = k;
          result.witness = std::move(c);
        }
        return;
      }
      for (int color = 1; color <= std::min(k, used + 1) && !found; ++color) {
        colors[pos] = color;
        self(self, pos + 1, std::max(used, color));
      }
    };
    visit(visit, 0, 0);
    if (found) return result;
  }
  throw std::logic_error("no distinguishing coloring with n colors");
}

int distinguishing_number(const Graph& g, std::uint64_t budget) {
  return find_distinguishing_coloring(g, budget).number;
}

BigInt stirling2(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  // row[j] = S(i, j) for the current i.
  std::vector<BigInt> row(k + 1, 0);
  row[0] = 1;
  for (std::uint64_t i = 1; i <= n; ++i) {
    for (std::uint64_t j = std::min(i, k); j >= 1; --j) row[j] = j * row[j] + row[j - 1];
    row[0] = 0;
  }
  return row[k];
}

BigInt phi_k(const Graph& g, std::uint64_t k, PhiMode mode, const CountOptions& options) {
  if (k < 1) throw Error(ErrorKind::kInvalidParams, "k must be at least 1");
  const PermGroup group = enumerate(g, options.group_cap);
  const auto n = static_cast<std::uint64_t>(g.order());
  if (mode == PhiMode::kFormula) {
    const std::size_t t = threshold_of_group(group).theta;
    if (k < t) {
      throw Error(ErrorKind::kFormulaInapplicable,
                  "phi formula needs k >= theta = " + std::to_string(t));
    }
    const BigInt numerator = factorial(k) * stirling2(n, k);
    if (numerator % group.order() != 0) throw std::logic_error("k! S(n,k) not divisible by |Aut|");
    return numerator / group.order();
  }
  if (k > n) return 0;
  return count_orbits(g, group, k, true, options.budget);
}

BigInt Phi_k(const Graph& g, std::uint64_t k, PhiSumMode mode, const CountOptions& options) {
  if (k < 1) throw Error(ErrorKind::kInvalidParams, "k must be at least 1");
  if (mode == PhiSumMode::kBrute) {
    const PermGroup group = enumerate(g, options.group_cap);
    return count_orbits(g, group, k, false, options.budget);
  }
  const auto n = static_cast<std::uint64_t>(g.order());
  const int d = distinguishing_number(g, options.budget);
  const std::size_t t = theta(g, {options.group_cap, false}).theta;
  BigInt total = 0;
  for (std::uint64_t i = static_cast<std::uint64_t>(d); i <= std::min(k, n); ++i) {
    const PhiMode part = i >= t ? PhiMode::kFormula : PhiMode::kBrute;
    total += binomial(k, i) * phi_k(g, i, part, options);
  }
  return total;
}

}  // namespace symbreak
