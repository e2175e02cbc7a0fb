#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "symbreak/distinguishing.hpp"
#include "symbreak/graph.hpp"

namespace symbreak {

struct Counterexample {
  std::string graph6;
  std::string detail;
};

// violations always equals counterexamples.size(). tallies holds named
// coverage counters (e.g. how often each union case ran); rows holds one
// record per parameter cell for grid checks.
struct VerificationReport {
  std::string check;
  std::uint64_t tested = 0;
  std::uint64_t violations = 0;
  std::uint64_t skipped = 0;
  std::vector<Counterexample> counterexamples;
  std::uint64_t elapsed_ms = 0;
  std::map<std::string, std::uint64_t> tallies;
  std::vector<nlohmann::json> rows;

  void fail(const Graph& g, std::string detail);
  void tally(const std::string& key, std::uint64_t by = 1) { tallies[key] += by; }
  // Appends other's counts, counterexamples and tallies (elapsed time excluded).
  void absorb(const VerificationReport& other);
};

nlohmann::json to_json(const VerificationReport& report);

inline constexpr int kSmallScanMaxOrder = 7;
inline constexpr std::uint64_t kJohnsonGroupLimit = 50'000;

struct VerifyOptions {
  std::size_t group_cap = kDefaultGroupCap;
  std::uint64_t coloring_budget = kDefaultColoringBudget;
  // Worker count; 0 reads SYMBREAK_THREADS and falls back to 1.
  unsigned threads = 0;
};

// Every labelled graph on 1..nmax vertices. nmax above 7 throws TooLarge.
VerificationReport scan_small_graphs(int nmax, const VerifyOptions& options = {});

// Every J(n,k,i) with k >= 2 and C(n,k) <= max_vertices (capped at 64).
// Cells whose expected group order exceeds kJohnsonGroupLimit are skipped for
// enumeration; K(2k,k) among them is priced with union_theta instead.
VerificationReport verify_johnson_grid(int max_vertices, const VerifyOptions& options = {});

// Random unions of small connected components, at most 14 vertices in total.
VerificationReport verify_union_random(int trials, std::uint64_t seed,
                                       const VerifyOptions& options = {});

VerificationReport verify_fixtures(const VerifyOptions& options = {});

}  // namespace symbreak
