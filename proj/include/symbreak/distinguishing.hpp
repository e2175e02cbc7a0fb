#pragma once

#include <cstdint>
#include <optional>

#include "symbreak/bigint.hpp"
#include "symbreak/coloring.hpp"
#include "symbreak/graph.hpp"
#include "symbreak/perm_group.hpp"

namespace symbreak {

inline constexpr std::uint64_t kDefaultColoringBudget = 10'000'000;

struct ThresholdResult {
  std::size_t theta = 1;
  // Absent iff the group is trivial.
  std::optional<Permutation> witness;
  // Prime whenever a witness is present; 1 otherwise.
  std::uint64_t witness_order = 1;
};

struct ThresholdOptions {
  std::size_t group_cap = kDefaultGroupCap;
  // Also take the maximum over elements of composite order and fail loudly
  // if it differs from the prime-order maximum.
  bool check_unrestricted = false;
};

// theta = 1 + max cycle_count over the group; the witness is the
// lexicographically smallest element attaining the maximum.
ThresholdResult threshold_of_group(const PermGroup& group, bool check_unrestricted = false);
ThresholdResult theta(const Graph& g, const ThresholdOptions& options = {});

struct MotionResult {
  std::size_t motion = 0;
  Permutation witness;
};

// Throws NoSymmetry for a trivial group.
MotionResult motion_of_group(const PermGroup& group);
MotionResult motion(const Graph& g, std::size_t group_cap = kDefaultGroupCap);
// theta(g) >= n - motion(g) + 2.
bool motion_bound_check(const Graph& g, std::size_t group_cap = kDefaultGroupCap);

// True iff no non-identity automorphism preserves the coloring; decided by a
// color-constrained automorphism search.
bool is_distinguishing(const Graph& g, const Coloring& c);

struct DistinguishingSearch {
  int number = 0;
  Coloring witness{{1}, 1};
  std::uint64_t candidates = 0;
};

// Least k with a distinguishing coloring on at most k colors. Colorings are
// tried as restricted growth strings (first occurrences in increasing color
// order), so each partition into color classes is visited once. Throws
// SearchBudgetExceeded after budget candidates.
DistinguishingSearch find_distinguishing_coloring(const Graph& g,
                                                  std::uint64_t budget = kDefaultColoringBudget);
int distinguishing_number(const Graph& g, std::uint64_t budget = kDefaultColoringBudget);

// Stirling number of the second kind; 0 when k > n.
BigInt stirling2(std::uint64_t n, std::uint64_t k);

enum class PhiMode { kBrute, kFormula };
enum class PhiSumMode { kBrute, kFormulaSum };

struct CountOptions {
  std::uint64_t budget = kDefaultColoringBudget;
  std::size_t group_cap = kDefaultGroupCap;
};

// Non-equivalent distinguishing colorings using exactly k colors.
// kBrute enumerates all k^n colorings and splits the distinguishing ones into
// orbits; kFormula is k! S(n,k) / |Aut| and needs k >= theta.
BigInt phi_k(const Graph& g, std::uint64_t k, PhiMode mode, const CountOptions& options = {});
// Non-equivalent distinguishing colorings with palette {1..k}.
// kFormulaSum sums C(k,i) phi_i for i = D..k.
BigInt Phi_k(const Graph& g, std::uint64_t k, PhiSumMode mode, const CountOptions& options = {});

}  // namespace symbreak
