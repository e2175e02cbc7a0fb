#include "symbreak/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <random>
#include <stdexcept>
#include <thread>

#include "symbreak/autsearch.hpp"
#include "symbreak/error.hpp"
#include "symbreak/families.hpp"
#include "symbreak/graph6.hpp"
#include "symbreak/johnson.hpp"
#include "symbreak/union_theta.hpp"

namespace symbreak {

namespace {

using Clock = std::chrono::steady_clock;

bool is_prime(std::uint64_t x) {
  if (x < 2) return false;
  for (std::uint64_t d = 2; d * d <= x; ++d)
    if (x % d == 0) return false;
  return true;
}

unsigned worker_count(const VerifyOptions& options) {
  if (options.threads > 0) return options.threads;
  if (const char* env = std::getenv("SYMBREAK_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(std::min<long>(v, 256));
  }
  return 1;
}

// Runs body(i, report) for i in [0, count) across workers. Each worker owns a
// contiguous block and the blocks are merged in index order, so the result
// does not depend on the worker count.
VerificationReport run_sharded(std::uint64_t count, unsigned workers,
                               const std::function<void(std::uint64_t, VerificationReport&)>& body) {
  workers = static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(workers, count)));
  std::vector<VerificationReport> parts(workers);
  std::vector<std::exception_ptr> errors(workers);
  auto run = [&](unsigned w) {
    const std::uint64_t lo = count * w / workers, hi = count * (w + 1) / workers;
    try {
      for (std::uint64_t i = lo; i < hi; ++i) body(i, parts[w]);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  VerificationReport merged;
  for (unsigned w = 0; w < workers; ++w) {
    if (errors[w]) std::rethrow_exception(errors[w]);
    merged.absorb(parts[w]);
  }
  return merged;
}

void stamp(VerificationReport& r, const std::string& check, Clock::time_point start) {
  r.check = check;
  r.elapsed_ms = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count());
}

Graph graph_from_pair_mask(int n, std::uint64_t mask) {
  std::vector<std::uint64_t> rows(n, 0);
  int bit = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      if ((mask >> bit) & 1U) {
        rows[u] |= std::uint64_t{1} << v;
        rows[v] |= std::uint64_t{1} << u;
      }
    }
  }
  return Graph::from_rows(std::move(rows));
}

bool theta3_shape_ok(const Graph& g) {
  const int n = g.order();
  if (n == 3) return true;
  return n % 2 == 0 && is_prime(n / 2) && n / 2 != 3 && n / 2 != 5 && is_connected(g);
}

void scan_one(const Graph& g, const Graph& p4, const VerifyOptions& options, VerificationReport& r) {
  const int n = g.order();
  const std::size_t full = static_cast<std::size_t>(n) * (n - 1) / 2;
  const bool trivial_shape = g.edge_count() == 0 || g.edge_count() == full;
  ++r.tested;

  const PermGroup group = automorphism_group(g, options.group_cap);
  ThresholdResult th;
  try {
    th = threshold_of_group(group, true);
  } catch (const std::logic_error& e) {
    r.fail(g, std::string("prime-order witness: ") + e.what());
    return;
  }
  const std::size_t t = th.theta;
  const bool symmetric = group.order() > 1;

  if ((t == 2) != (n == 2)) r.fail(g, "theta=" + std::to_string(t) + " but n=" + std::to_string(n));
  if (t > static_cast<std::size_t>(n)) r.fail(g, "theta exceeds n");
  if (symmetric && !is_prime(th.witness_order)) r.fail(g, "witness of composite order");
  if (symmetric) {
    const std::size_t m = motion_of_group(group).motion;
    if (t + m < static_cast<std::size_t>(n) + 2) {
      r.fail(g, "motion bound: theta=" + std::to_string(t) + ", motion=" + std::to_string(m));
    }
  }
  if (t == 3) {
    r.tally("theta3_n" + std::to_string(n));
    if (!theta3_shape_ok(g)) r.fail(g, "theta=3 outside the necessary shapes");
    if (n == 4 && !isomorphic(g, p4)) r.fail(g, "theta=3 on 4 vertices but not P_4");
  }

  int d = 0;
  try {
    d = distinguishing_number(g, options.coloring_budget);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kSearchBudgetExceeded) throw;
    r.tally("dnum_skipped");
    return;
  }
  if (static_cast<std::size_t>(d) > t) r.fail(g, "D=" + std::to_string(d) + " exceeds theta");
  const bool equal = static_cast<std::size_t>(d) == t;
  if (equal != (!symmetric || trivial_shape)) {
    r.fail(g, "theta=D=" + std::to_string(t) + " mismatch with asymmetric/complete/empty");
  }
}

// A component drawn by the random union generator.
struct PoolEntry {
  Graph graph;
  bool asymmetric;
};

std::vector<PoolEntry> symmetric_pool() {
  std::vector<PoolEntry> out;
  for (const Graph& g : {path_graph(2), path_graph(3), complete_graph(3), path_graph(4),
                         cycle_graph(4), complete_bipartite(1, 3), complete_graph(4), cycle_graph(5),
                         path_graph(5), complete_bipartite(2, 3), cycle_graph(6)}) {
    out.push_back({g, false});
  }
  return out;
}

std::vector<PoolEntry> asymmetric_pool() {
  static constexpr Edge kA[] = {{0, 2}, {1, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 5}};
  static constexpr Edge kB[] = {{0, 1}, {0, 4}, {1, 2}, {1, 4}, {1, 5}, {2, 3}, {3, 4}};
  static constexpr Edge kC[] = {{0, 1}, {1, 3}, {1, 4}, {2, 6}, {3, 6}, {4, 5}};
  std::vector<PoolEntry> out;
  for (const Graph& g : {complete_graph(1), named_fixture("asym6"), Graph(6, kA, "asym6b"),
                         Graph(6, kB, "asym6c"), Graph(7, kC, "asym7")}) {
    out.push_back({g, true});
  }
  return out;
}

std::string union_case_name(UnionCase c) {
  switch (c) {
    case UnionCase::kAllSymmetric: return "case_a";
    case UnionCase::kAllAsymmetric: return "case_b";
    case UnionCase::kMixed: return "case_c";
    case UnionCase::kMixedAsymmetricRest: return "case_c_exception";
  }
  return "?";
}

}  // namespace

void VerificationReport::fail(const Graph& g, std::string detail) {
  ++violations;
  counterexamples.push_back({write_graph6(g), std::move(detail)});
}

void VerificationReport::absorb(const VerificationReport& other) {
  tested += other.tested;
  violations += other.violations;
  skipped += other.skipped;
  counterexamples.insert(counterexamples.end(), other.counterexamples.begin(),
                         other.counterexamples.end());
  for (const auto& [k, v] : other.tallies) tallies[k] += v;
  rows.insert(rows.end(), other.rows.begin(), other.rows.end());
}

nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json ces = nlohmann::json::array();
  for (const auto& c : report.counterexamples) ces.push_back({{"graph6", c.graph6}, {"detail", c.detail}});
  return {{"check", report.check},         {"tested", report.tested},
          {"violations", report.violations}, {"skipped", report.skipped},
          {"counterexamples", ces},        {"elapsed_ms", report.elapsed_ms},
          {"tallies", report.tallies},
          {"rows", report.rows}};
}

VerificationReport scan_small_graphs(int nmax, const VerifyOptions& options) {
  if (nmax > kSmallScanMaxOrder) {
    throw Error(ErrorKind::kTooLarge, "small-graph scan supports nmax <= 7", kSmallScanMaxOrder);
  }
  if (nmax < 1) throw Error(ErrorKind::kInvalidParams, "nmax must be at least 1");
  const auto start = Clock::now();
  const Graph p4 = path_graph(4);
  VerificationReport total;
  for (int n = 1; n <= nmax; ++n) {
    const std::uint64_t count = std::uint64_t{1} << (n * (n - 1) / 2);
    total.absorb(run_sharded(count, worker_count(options), [&](std::uint64_t mask, VerificationReport& r) {
      scan_one(graph_from_pair_mask(n, mask), p4, options, r);
    }));
  }
  stamp(total, "small_graphs", start);
  return total;
}

VerificationReport verify_johnson_grid(int max_vertices, const VerifyOptions& options) {
  const auto start = Clock::now();
  const int limit = std::min(max_vertices, Graph::kMaxVertices);
  std::vector<JohnsonParams> cells;
  for (int n = 4; n <= 64; ++n)
    for (int k = 2; 2 * k <= n; ++k)
      if (binomial(n, k) <= limit)
        for (int i = 1; i <= k; ++i) cells.push_back({n, k, i});

  VerificationReport report = run_sharded(cells.size(), worker_count(options), [&](std::uint64_t idx, VerificationReport& r) {
    const JohnsonParams p = cells[idx];
    const std::string tag = "J(" + std::to_string(p.n) + "," + std::to_string(p.k) + "," +
                            std::to_string(p.i) + ")";
    const Graph g = generalized_johnson(p);
    const BigInt theta_formula = johnson_theta(p);

    std::vector<int> swap(p.n);
    for (int v = 0; v < p.n; ++v) swap[v] = v;
    std::swap(swap[0], swap[1]);
    const Permutation alpha = natural_automorphism(Permutation(std::span<const int>(swap)), p);
    const BigInt expected_c = binomial(p.n, p.k) - binomial(p.n - 2, p.k - 1);
    if (raw_cycle_count(alpha) != expected_c) {
      r.fail(g, tag + ": transposition cycle count " + std::to_string(raw_cycle_count(alpha)) +
                    " != " + to_string(expected_c));
    }

    const BigInt expected_order = johnson_aut_order(p);
    nlohmann::json row = {{"n", p.n}, {"k", p.k}, {"i", p.i}, {"case", std::string(1, aut_order_case(p))},
                          {"theta_formula", to_string(theta_formula)},
                          {"aut_order_formula", to_string(expected_order)}};
    if (expected_order > kJohnsonGroupLimit) {
      ++r.skipped;
      row["status"] = "skipped";
      if (aut_order_case(p) == 'g') {
        // K(2k,k) is e disjoint edges.
        UnionSpec spec;
        const auto e = static_cast<std::size_t>(binomial(p.n, p.k) / 2);
        for (std::size_t c = 0; c < e; ++c) spec.components.push_back({path_graph(2), 2, false});
        if (union_theta(spec) != theta_formula) r.fail(g, tag + ": union pricing disagrees");
        r.tally("union_cross_checks");
        row["theta_union"] = to_string(theta_formula);
      }
      r.rows.push_back(std::move(row));
      return;
    }
    ++r.tested;
    const PermGroup group = automorphism_group(g, options.group_cap);
    if (BigInt(group.order()) != expected_order) {
      r.fail(g, tag + ": |Aut|=" + std::to_string(group.order()) + ", expected " + to_string(expected_order));
    }
    const ThresholdResult th = threshold_of_group(group);
    row["status"] = "enumerated";
    row["aut_order"] = group.order();
    row["theta"] = th.theta;
    if (BigInt(th.theta) != theta_formula) {
      r.fail(g, tag + ": theta " + std::to_string(th.theta) + " != " + to_string(theta_formula));
    }
    try {
      const int d = distinguishing_number(g, options.coloring_budget);
      if (BigInt(d) != johnson_D(p)) {
        r.fail(g, tag + ": D " + std::to_string(d) + " != " + to_string(johnson_D(p)));
      }
      r.tally("dnum_checked");
      row["dnum"] = d;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kSearchBudgetExceeded) throw;
      r.tally("dnum_skipped");
    }
    r.rows.push_back(std::move(row));
  });
  stamp(report, "johnson_grid", start);
  return report;
}

VerificationReport verify_union_random(int trials, std::uint64_t seed, const VerifyOptions& options) {
  if (trials < 1) throw Error(ErrorKind::kInvalidParams, "trials must be at least 1");
  const auto start = Clock::now();
  const auto sym = symmetric_pool();
  const auto asym = asymmetric_pool();
  constexpr int kMaxTotal = 14;
  constexpr std::size_t kUnionCap = 200'000;

  VerificationReport report = run_sharded(static_cast<std::uint64_t>(trials), worker_count(options),
                                          [&](std::uint64_t t, VerificationReport& r) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + t);
    const int scenario = static_cast<int>(t % 3);  // all symmetric, all asymmetric, mixed
    auto pick = [&](const std::vector<PoolEntry>& pool) -> const PoolEntry& {
      return pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    };
    for (int attempt = 0;; ++attempt) {
      if (attempt > 1000) throw std::logic_error("union generator failed to find a sample");
      std::vector<const PoolEntry*> parts;
      const int count = std::uniform_int_distribution<int>(scenario == 2 ? 2 : 1, 4)(rng);
      for (int c = 0; c < count; ++c) {
        bool from_sym = scenario == 0 || (scenario == 2 && c == 0);
        if (scenario == 2 && c > 0) from_sym = std::bernoulli_distribution(0.5)(rng);
        // Repeats make nu and the wreath symmetries show up.
        if (c > 0 && std::bernoulli_distribution(0.3)(rng)) parts.push_back(parts.back());
        else parts.push_back(&pick(from_sym ? sym : asym));
      }
      int total = 0;
      bool any_sym = false, any_asym = false;
      for (const auto* p : parts) {
        total += p->graph.order();
        (p->asymmetric ? any_asym : any_sym) = true;
      }
      if (total > kMaxTotal) continue;
      if (scenario == 2 && !(any_sym && any_asym)) continue;

      std::vector<Graph> graphs;
      UnionSpec spec;
      for (const auto* p : parts) {
        graphs.push_back(p->graph);
        spec.components.push_back({p->graph, std::nullopt, std::nullopt});
      }
      const Graph whole = disjoint_union(graphs);
      std::size_t direct;
      try {
        direct = theta(whole, {kUnionCap, false}).theta;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::kGroupTooLarge) throw;
        continue;
      }
      ++r.tested;
      const UnionTheta calc = union_theta_detailed(spec, options.group_cap);
      r.tally(union_case_name(calc.which));
      if (calc.theta != direct) {
        std::string names;
        for (const auto& g : graphs) names += (names.empty() ? "" : " + ") + g.name();
        r.fail(whole, names + ": union_theta " + std::to_string(calc.theta) + " != enumeration " +
                          std::to_string(direct));
      }
      return;
    }
  });
  stamp(report, "union_random", start);
  return report;
}

VerificationReport verify_fixtures(const VerifyOptions& options) {
  const auto start = Clock::now();
  VerificationReport r;
  auto check = [&](const Graph& g, const std::string& what, std::uint64_t got, std::uint64_t want) {
    ++r.tested;
    if (got != want) {
      r.fail(g, g.name() + " " + what + "=" + std::to_string(got) + ", expected " + std::to_string(want));
    }
  };
  auto threshold = [&](const Graph& g, std::uint64_t want) {
    const ThresholdResult th = theta(g, {options.group_cap, true});
    check(g, "theta", th.theta, want);
    if (th.witness) check(g, "witness prime order", is_prime(th.witness_order), 1);
    return th;
  };

  threshold(named_fixture("g6"), 5);
  {
    const Graph g24 = named_fixture("g24");
    const ThresholdResult th = threshold(g24, 17);
    check(g24, "max cycle count", th.theta - 1, 16);
  }
  {
    const Graph f14 = named_fixture("figure14");
    check(f14, "aut_order", automorphism_group(f14, options.group_cap).order(), 7);
    threshold(f14, 3);
  }
  {
    const Graph pet = named_fixture("petersen");
    threshold(pet, 8);
    check(pet, "dnum", static_cast<std::uint64_t>(distinguishing_number(pet, options.coloring_budget)), 3);
  }
  {
    const Graph g1 = named_fixture("g1");
    check(g1, "aut_order", automorphism_group(g1, options.group_cap).order(), 3);
    threshold(g1, 4);
    const Graph g2 = named_fixture("g2");
    check(g2, "aut_order", automorphism_group(g2, options.group_cap).order(), 5);
    threshold(g2, 5);
  }
  stamp(r, "fixtures", start);
  return r;
}

}  // namespace symbreak
