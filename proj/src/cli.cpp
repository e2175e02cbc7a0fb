#include "symbreak/cli.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "symbreak/autsearch.hpp"
#include "symbreak/distinguishing.hpp"
#include "symbreak/error.hpp"
#include "symbreak/families.hpp"
#include "symbreak/graph6.hpp"
#include "symbreak/johnson.hpp"
#include "symbreak/verify.hpp"

namespace symbreak {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void bad_spec(const std::string& what) { throw Error(ErrorKind::kInvalidParams, what); }

int to_int(const std::string& s) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) bad_spec("'" + s + "' is not an integer");
  return v;
}

json big(const BigInt& x) {
  if (x >= 0 && x <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(x);
  return x.str();
}

std::string digest(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream s;
  s << std::hex << std::setw(16) << std::setfill('0') << h;
  return s.str();
}

json error_json(std::string_view kind, const std::string& message, std::uint64_t limit = 0) {
  json e = {{"kind", kind}, {"message", message}};
  if (limit != 0) e["limit"] = limit;
  return {{"error", e}};
}

void emit(std::ostream& out, const json& j, bool pretty) {
  if (!pretty) {
    out << j.dump() << "\n";
    return;
  }
  for (const auto& [key, value] : j.items()) {
    out << std::left << std::setw(18) << key << " "
        << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
}

struct ComputeFlags {
  std::string graph6, edges_file, family;
  bool theta = false, dnum = false, motion = false, aut_order = false;
  std::vector<std::uint64_t> phi, Phi;
};

json run_compute(const ComputeFlags& f, std::size_t cap, std::uint64_t budget) {
  const int sources = !f.graph6.empty() + !f.edges_file.empty() + !f.family.empty();
  if (sources != 1) throw UsageError("compute needs exactly one of --graph6, --edges, --family");

  Graph g = Graph(1, {});
  json input;
  if (!f.graph6.empty()) {
    g = parse_graph6(f.graph6);
    input = {{"source", "graph6"}, {"value", f.graph6}};
  } else if (!f.edges_file.empty()) {
    std::ifstream file(f.edges_file);
    if (!file) throw UsageError("cannot read " + f.edges_file);
    std::stringstream text;
    text << file.rdbuf();
    g = parse_edge_list(text.str());
    input = {{"source", "edges"}, {"value", f.edges_file}};
  } else {
    try {
      g = parse_family_spec(f.family);
    } catch (const Error& e) {
      throw UsageError("bad family spec '" + f.family + "': " + e.what());
    }
    input = {{"source", "family"}, {"value", f.family}};
  }
  const std::string g6 = g.order() <= kGraph6MaxOrder ? write_graph6(g) : std::string();
  input["n"] = g.order();
  input["graph6"] = g6;
  input["digest"] = digest(g6.empty() ? write_edge_list(g) : g6);

  json out = {{"command", "compute"}, {"input", input}};
  std::optional<PermGroup> group;
  auto enumerated = [&]() -> const PermGroup& {
    if (!group) group = automorphism_group(g, cap);
    return *group;
  };
  if (f.aut_order) out["aut_order"] = enumerated().order();
  if (f.theta) {
    const ThresholdResult th = threshold_of_group(enumerated());
    out["theta"] = th.theta;
    out["theta_witness"] = th.witness ? to_cycle_string(*th.witness) : std::string("()");
    out["theta_witness_order"] = th.witness_order;
  }
  if (f.motion) {
    if (enumerated().order() < 2) {
      out["motion"] = nullptr;
    } else {
      const MotionResult m = motion_of_group(enumerated());
      out["motion"] = m.motion;
      out["motion_witness"] = to_cycle_string(m.witness);
    }
  }
  if (f.dnum) {
    const DistinguishingSearch d = find_distinguishing_coloring(g, budget);
    out["dnum"] = d.number;
    out["dnum_coloring"] = d.witness.colors();
  }
  const CountOptions counting{budget, cap};
  if (!f.phi.empty()) {
    json values = json::object();
    for (std::uint64_t k : f.phi) {
      const std::size_t t = threshold_of_group(enumerated()).theta;
      const PhiMode mode = k >= t ? PhiMode::kFormula : PhiMode::kBrute;
      values[std::to_string(k)] = big(phi_k(g, k, mode, counting));
    }
    out["phi"] = values;
  }
  if (!f.Phi.empty()) {
    json values = json::object();
    for (std::uint64_t k : f.Phi) values[std::to_string(k)] = big(Phi_k(g, k, PhiSumMode::kFormulaSum, counting));
    out["Phi"] = values;
  }
  return out;
}

}  // namespace

Graph parse_family_spec(std::string_view spec) {
  std::istringstream in{std::string(spec)};
  std::vector<std::string> w;
  for (std::string t; in >> t;) w.push_back(t);
  if (w.empty()) bad_spec("empty family spec");
  const std::string& kind = w[0];
  auto arity = [&](std::size_t n) {
    if (w.size() != n + 1) bad_spec("'" + kind + "' takes " + std::to_string(n) + " argument(s)");
  };
  if (kind == "path" || kind == "cycle" || kind == "complete" || kind == "empty") {
    arity(1);
    const int n = to_int(w[1]);
    if (kind == "path") return path_graph(n);
    if (kind == "cycle") return cycle_graph(n);
    if (kind == "complete") return complete_graph(n);
    return empty_graph(n);
  }
  if (kind == "bipartite") {
    arity(2);
    return complete_bipartite(to_int(w[1]), to_int(w[2]));
  }
  if (kind == "circulant") {
    arity(2);
    std::vector<int> s;
    std::stringstream list(w[2]);
    for (std::string item; std::getline(list, item, ',');) s.push_back(to_int(item));
    return circulant(to_int(w[1]), s);
  }
  if (kind == "johnson") {
    arity(3);
    return generalized_johnson({to_int(w[1]), to_int(w[2]), to_int(w[3])});
  }
  if (kind == "kneser") {
    arity(2);
    return kneser(to_int(w[1]), to_int(w[2]));
  }
  if (kind == "petersen") {
    arity(0);
    return named_fixture("petersen");
  }
  if (kind == "g6fixture") {
    arity(1);
    return named_fixture(w[1]);
  }
  bad_spec("unknown family '" + kind + "'");
  throw std::logic_error("unreachable");
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Distinguishing threshold and symmetry-breaking invariants of small graphs", "symbreak"};
  app.require_subcommand(1);
  bool pretty = false;
  std::size_t group_cap = kDefaultGroupCap;
  std::uint64_t budget = kDefaultColoringBudget;
  app.add_flag("--pretty", pretty, "Key/value table instead of JSON");
  app.add_option("--group-cap", group_cap, "Maximum automorphism-group size to enumerate")->capture_default_str();
  app.add_option("--coloring-budget", budget, "Maximum colorings examined by searches")->capture_default_str();

  ComputeFlags cf;
  auto* compute = app.add_subcommand("compute", "Compute invariants of one graph");
  compute->add_option("--graph6", cf.graph6, "Graph in graph6 format");
  compute->add_option("--edges", cf.edges_file, "Edge-list file: vertex count, then one 'u v' per line");
  compute->add_option("--family", cf.family, "Family spec, e.g. \"johnson 7 3 2\"");
  compute->add_flag("--theta", cf.theta, "Distinguishing threshold with a witness");
  compute->add_flag("--dnum", cf.dnum, "Distinguishing number with a witness coloring");
  compute->add_flag("--motion", cf.motion, "Motion (null for asymmetric graphs)");
  compute->add_flag("--aut-order", cf.aut_order, "Order of the automorphism group");
  compute->add_option("--phi", cf.phi, "Non-equivalent distinguishing colorings using exactly K colors");
  compute->add_option("--Phi", cf.Phi, "Non-equivalent distinguishing colorings from a K-color palette");

  std::string gen_family;
  bool gen_edges = false;
  auto* generate = app.add_subcommand("generate", "Print a family member as graph6 or an edge list");
  generate->add_option("--family", gen_family, "Family spec")->required();
  generate->add_flag("--edges", gen_edges, "Edge list instead of graph6");

  std::string suite;
  int nmax = 6, trials = 100, max_vertices = 36;
  std::uint64_t seed = 1;
  auto* verify = app.add_subcommand("verify", "Run a verification suite and print its report");
  verify->add_option("--suite", suite, "small | johnson | union | fixtures | all")->required();
  verify->add_option("--nmax", nmax, "Largest order for the small-graph scan")->capture_default_str();
  verify->add_option("--seed", seed, "Seed for the random union suite")->capture_default_str();
  verify->add_option("--trials", trials, "Trials for the random union suite")->capture_default_str();
  verify->add_option("--max-vertices", max_vertices, "Vertex limit for the Johnson grid")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    out << error_json("UsageError", e.what()).dump() << "\n";
    err << app.help();
    return kExitUsage;
  }

  try {
    if (compute->parsed()) {
      emit(out, run_compute(cf, group_cap, budget), pretty);
      return kExitOk;
    }
    if (generate->parsed()) {
      Graph g = Graph(1, {});
      try {
        g = parse_family_spec(gen_family);
      } catch (const Error& e) {
        throw UsageError("bad family spec '" + gen_family + "': " + e.what());
      }
      out << (gen_edges ? write_edge_list(g) : write_graph6(g) + "\n");
      return kExitOk;
    }
    const VerifyOptions options{group_cap, budget, 0};
    std::vector<VerificationReport> reports;
    const bool all = suite == "all";
    if (!all && suite != "small" && suite != "johnson" && suite != "union" && suite != "fixtures") {
      throw UsageError("unknown suite '" + suite + "'");
    }
    if (all || suite == "small") reports.push_back(scan_small_graphs(nmax, options));
    if (all || suite == "johnson") reports.push_back(verify_johnson_grid(max_vertices, options));
    if (all || suite == "union") reports.push_back(verify_union_random(trials, seed, options));
    if (all || suite == "fixtures") reports.push_back(verify_fixtures(options));
    std::uint64_t violations = 0;
    json body;
    if (reports.size() == 1) {
      body = to_json(reports.front());
    } else {
      body = {{"command", "verify"}, {"reports", json::array()}};
      for (const auto& r : reports) body["reports"].push_back(to_json(r));
    }
    for (const auto& r : reports) violations += r.violations;
    if (reports.size() > 1) body["violations"] = violations;
    emit(out, body, pretty);
    return violations == 0 ? kExitOk : kExitFailure;
  } catch (const UsageError& e) {
    out << error_json("UsageError", e.what()).dump() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    out << error_json(error_kind_name(e.kind()), e.what(), e.limit()).dump() << "\n";
    return kExitFailure;
  }
}

}  // namespace symbreak
