// Acceptance suite: one PASS/FAIL line per criterion, exact integers only.
// Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "symbreak/autsearch.hpp"
#include "symbreak/distinguishing.hpp"
#include "symbreak/families.hpp"
#include "symbreak/johnson.hpp"
#include "symbreak/union_theta.hpp"
#include "symbreak/verify.hpp"

using namespace symbreak;

namespace {

bool is_prime(std::uint64_t x) {
  if (x < 2) return false;
  for (std::uint64_t d = 2; d * d <= x; ++d)
    if (x % d == 0) return false;
  return true;
}

// Collects mismatches for one criterion.
struct Ledger {
  std::uint64_t checked = 0;
  std::vector<std::string> misses;

  template <class A, class B>
  void expect(const std::string& what, const A& got, const B& want) {
    ++checked;
    if (got == want) return;
    std::ostringstream s;
    s << what << " = " << got << " (expected " << want << ")";
    misses.push_back(s.str());
  }
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<void(Ledger&)>& body) {
  Ledger l;
  const auto start = std::chrono::steady_clock::now();
  std::string crash;
  try {
    body(l);
  } catch (const std::exception& e) {
    crash = e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool ok = l.misses.empty() && crash.empty() && secs < limit_s;
  failures += !ok;
  std::printf("[%s] criterion %d: %s: %llu checks, %zu mismatches, %.2f s (limit %.0f s)\n",
              ok ? "PASS" : "FAIL", id, title, static_cast<unsigned long long>(l.checked),
              l.misses.size(), secs, limit_s);
  for (const auto& m : l.misses) std::printf("       mismatch: %s\n", m.c_str());
  if (!crash.empty()) std::printf("       error: %s\n", crash.c_str());
  if (secs >= limit_s) std::printf("       runtime over limit\n");
  std::fflush(stdout);
}

std::size_t enum_theta(const Graph& g) { return theta(g).theta; }

}  // namespace

int main() {
  criterion(1, "families table (theta by enumeration)", 5, [](Ledger& l) {
    for (int n = 1; n <= 8; ++n) {
      l.expect("theta(K_" + std::to_string(n) + ")", enum_theta(complete_graph(n)), std::size_t(n));
      l.expect("theta(co-K_" + std::to_string(n) + ")", enum_theta(empty_graph(n)), std::size_t(n));
    }
    for (int n = 2; n <= 12; ++n)
      l.expect("theta(P_" + std::to_string(n) + ")", enum_theta(path_graph(n)), std::size_t((n + 1) / 2 + 1));
    for (int n = 3; n <= 12; ++n)
      l.expect("theta(C_" + std::to_string(n) + ")", enum_theta(cycle_graph(n)), std::size_t(n / 2 + 2));
    for (int m = 1; m <= 9; ++m)
      for (int n = m; m + n <= 10; ++n)
        l.expect("theta(K_" + std::to_string(m) + "," + std::to_string(n) + ")",
                 enum_theta(complete_bipartite(m, n)), std::size_t(m + n));
  });

  criterion(2, "distinguishing numbers", 10, [](Ledger& l) {
    for (int n = 2; n <= 10; ++n) l.expect("D(P_" + std::to_string(n) + ")", distinguishing_number(path_graph(n)), 2);
    for (int n = 3; n <= 5; ++n) l.expect("D(C_" + std::to_string(n) + ")", distinguishing_number(cycle_graph(n)), 3);
    for (int n = 6; n <= 10; ++n) l.expect("D(C_" + std::to_string(n) + ")", distinguishing_number(cycle_graph(n)), 2);
    for (int n = 1; n <= 4; ++n)
      l.expect("D(K_" + std::to_string(n) + "," + std::to_string(n) + ")",
               distinguishing_number(complete_bipartite(n, n)), n + 1);
    l.expect("D(Petersen)", distinguishing_number(named_fixture("petersen")), 3);
  });

  criterion(3, "Kneser K(n,2) threshold", 60, [](Ledger& l) {
    for (int n : {5, 6, 7}) {
      const std::size_t want = static_cast<std::size_t>((n * n - 3 * n + 6) / 2);
      l.expect("theta(K(" + std::to_string(n) + ",2))", enum_theta(kneser(n, 2)), want);
    }
  });

  criterion(4, "generalized Johnson grid, C(n,k) <= 36, |Aut| <= 50000", 120, [](Ledger& l) {
    const std::vector<JohnsonParams> required{{5, 2, 1}, {5, 2, 2}, {6, 2, 1}, {6, 2, 2}, {4, 2, 1}, {4, 2, 2},
                                              {6, 3, 1}, {6, 3, 2}, {7, 3, 1}, {7, 3, 2}, {7, 3, 3}};
    std::vector<JohnsonParams> done;
    for (int n = 4; n <= 36; ++n) {
      for (int k = 2; 2 * k <= n; ++k) {
        if (binomial(n, k) > 36) continue;
        for (int i = 1; i <= k; ++i) {
          const JohnsonParams p{n, k, i};
          if (johnson_aut_order(p) > kJohnsonGroupLimit) continue;
          const std::string tag = "J(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(i) + ")";
          const PermGroup group = automorphism_group(generalized_johnson(p));
          l.expect("|Aut " + tag + "|", BigInt(group.order()), johnson_aut_order(p));
          l.expect("theta " + tag, BigInt(threshold_of_group(group).theta), johnson_theta(p));
          done.push_back(p);
        }
      }
    }
    for (const auto& p : required) {
      bool seen = false;
      for (const auto& d : done) seen |= d.n == p.n && d.k == p.k && d.i == p.i;
      l.expect("J(" + std::to_string(p.n) + "," + std::to_string(p.k) + "," + std::to_string(p.i) + ") enumerated",
               seen, true);
    }
    l.expect("|Aut J(7,3,2)|", automorphism_group(generalized_johnson({7, 3, 2})).order(), std::uint64_t(40320));

    UnionSpec k63;
    for (int c = 0; c < 10; ++c) k63.components.push_back({complete_graph(2), 2, false});
    l.expect("union_theta(10 K_2)", union_theta(k63), std::size_t(20));
    l.expect("theta(K(6,3)) closed form", johnson_theta({6, 3, 3}), BigInt(20));
  });

  criterion(5, "Sym(n+1) action on J(7,3,2)", 10, [](Ledger& l) {
    const JohnsonParams p{7, 3, 2};
    const Permutation sigma = Permutation::from_cycles(8, {{0, 1, 7}, {2, 3, 4}, {5, 6}});
    l.expect("sigma~({1,2,3})", subset_to_string(sym_np1_image(sigma, make_subset({1, 2, 3}), p)), std::string("{1,2,4}"));
    l.expect("sigma~({3,4,5})", subset_to_string(sym_np1_image(sigma, make_subset({3, 4, 5}), p)), std::string("{2,6,7}"));

    const Graph g = generalized_johnson(p);
    const auto verts = k_subsets_colex(7, 3);
    std::mt19937_64 rng(20240601);
    for (int t = 0; t < 10; ++t) {
      std::vector<int> img(8);
      for (int v = 0; v < 8; ++v) img[v] = v;
      std::shuffle(img.begin(), img.end(), rng);
      const Permutation s{std::span<const int>(img)};
      std::vector<int> map(verts.size());
      for (std::size_t v = 0; v < verts.size(); ++v) map[v] = colex_rank(sym_np1_image(s, verts[v], p));
      std::uint64_t bad = 0;
      for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v) bad += g.adjacent(u, v) != g.adjacent(map[u], map[v]);
      l.expect("adjacency changes under random sigma #" + std::to_string(t), bad, std::uint64_t(0));
    }
  });

  criterion(6, "named fixtures", 30, [](Ledger& l) {
    auto fixture = [&](const char* name, std::size_t want_theta) {
      const ThresholdResult th = theta(named_fixture(name), {kDefaultGroupCap, true});
      l.expect(std::string("theta(") + name + ")", th.theta, want_theta);
      l.expect(std::string("witness order of ") + name + " is prime", is_prime(th.witness_order), true);
      return th;
    };
    fixture("g6", 5);
    const ThresholdResult g24 = fixture("g24", 17);
    l.expect("max cycle count of g24", g24.theta - 1, std::size_t(16));
    l.expect("|Aut(figure14)|", automorphism_group(figure14_graph()).order(), std::uint64_t(7));
    fixture("figure14", 3);
  });
  {
    const ThresholdResult alt = theta(named_fixture("g24path"));
    std::printf("       note: Cay(Sym(4), {(1 2),(2 3),(3 4)}) has theta %zu, |Aut| %llu\n", alt.theta,
                static_cast<unsigned long long>(automorphism_group(named_fixture("g24path")).order()));
  }

  criterion(7, "exhaustive scan of labelled graphs, n <= 6", 120, [](Ledger& l) {
    const VerificationReport r = scan_small_graphs(6);
    l.expect("graphs scanned", r.tested, std::uint64_t(1 + 2 + 8 + 64 + 1024 + 32768));
    l.expect("violations", r.violations, std::uint64_t(0));
    l.expect("D searches skipped", r.tallies.count("dnum_skipped"), std::size_t(0));
    for (const auto& c : r.counterexamples) l.expect("counterexample " + c.graph6, c.detail, std::string());
  });

  criterion(8, "coloring counts", 60, [](Ledger& l) {
    for (const Graph& g : {path_graph(4), cycle_graph(5), complete_graph(3), complete_graph(4), cycle_graph(6)}) {
      const std::size_t t = enum_theta(g);
      for (std::uint64_t k = t; k <= 6; ++k) {
        l.expect("phi_" + std::to_string(k) + "(" + g.name() + ") brute vs formula",
                 phi_k(g, k, PhiMode::kBrute), phi_k(g, k, PhiMode::kFormula));
      }
    }
    auto relation = [&](const Graph& g, std::uint64_t k, const BigInt& brute) {
      BigInt sum = 0;
      for (std::uint64_t i = 1; i <= k; ++i) sum += binomial(k, i) * phi_k(g, i, PhiMode::kBrute);
      l.expect("sum C(k,i) phi_i for " + g.name() + ", k=" + std::to_string(k), sum, brute);
      l.expect("formula_sum for " + g.name() + ", k=" + std::to_string(k), Phi_k(g, k, PhiSumMode::kFormulaSum), brute);
    };
    for (std::uint64_t n = 2; n <= 6; ++n) {
      const Graph g = path_graph(static_cast<int>(n));
      for (std::uint64_t k = 1; k <= 4; ++k) {
        const BigInt brute = Phi_k(g, k, PhiSumMode::kBrute);
        l.expect("Phi_" + std::to_string(k) + "(P_" + std::to_string(n) + ")", brute, path_Phi_closed_form(n, k));
        relation(g, k, brute);
      }
    }
    for (std::uint64_t n = 1; n <= 5; ++n) {
      const Graph g = complete_graph(static_cast<int>(n));
      for (std::uint64_t k = 1; k <= 7; ++k) {
        const BigInt brute = Phi_k(g, k, PhiSumMode::kBrute);
        l.expect("Phi_" + std::to_string(k) + "(K_" + std::to_string(n) + ")", brute, complete_Phi_closed_form(n, k));
        relation(g, k, brute);
      }
    }
  });

  criterion(9, "union theorem on 100 seeded random unions", 60, [](Ledger& l) {
    const VerificationReport r = verify_union_random(100, 1);
    l.expect("unions compared", r.tested, std::uint64_t(100));
    l.expect("violations", r.violations, std::uint64_t(0));
    for (const char* key : {"case_a", "case_b", "case_c", "case_c_exception"}) {
      const auto it = r.tallies.find(key);
      l.expect(std::string(key) + " exercised", it != r.tallies.end() && it->second > 0, true);
    }
    for (const auto& c : r.counterexamples) l.expect("counterexample " + c.graph6, c.detail, std::string());
  });

  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
