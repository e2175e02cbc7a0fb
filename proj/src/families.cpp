#include "symbreak/families.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "symbreak/autsearch.hpp"
#include "symbreak/cayley.hpp"
#include "symbreak/error.hpp"
#include "symbreak/johnson.hpp"

namespace symbreak {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::kInvalidParams, what);
}

std::string sized_name(std::string_view base, std::span<const int> sizes) {
  std::string out(base);
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    out += (i == 0 ? " " : ",") + std::to_string(sizes[i]);
  }
  return out;
}

// Graph on the given 1-based labels, renumbered in increasing label order.
Graph from_labelled_edges(std::vector<int> labels, std::span<const std::pair<int, int>> edges,
                          std::string name) {
  std::sort(labels.begin(), labels.end());
  auto index = [&](int label) {
    auto it = std::lower_bound(labels.begin(), labels.end(), label);
    if (it == labels.end() || *it != label) throw std::logic_error("fixture label missing");
    return static_cast<int>(it - labels.begin());
  };
  EdgeList list;
  for (auto [a, b] : edges) list.push_back({index(a), index(b)});
  return Graph(static_cast<int>(labels.size()), list, std::move(name));
}

Graph g1_fixture() {
  static constexpr std::pair<int, int> kEdges[] = {
      {1, 3}, {3, 5}, {5, 1}, {6, 5}, {6, 3}, {6, 7}, {8, 7}, {6, 8},
      {9, 8}, {6, 9}, {9, 3}, {9, 10}, {9, 11}, {11, 10}, {3, 11}};
  return from_labelled_edges({1, 3, 5, 6, 7, 8, 9, 10, 11}, kEdges, "g1");
}

Graph g2_fixture() {
  static constexpr std::pair<int, int> kEdges[] = {
      {1, 3},   {3, 5},   {5, 1},   {6, 7},   {6, 8},   {8, 7},   {3, 7},
      {9, 6},   {9, 3},   {10, 9},  {10, 5},  {10, 11}, {12, 11}, {10, 12},
      {9, 13},  {12, 13}, {14, 13}, {15, 13}, {14, 15}, {16, 15}, {16, 9},
      {17, 16}, {18, 16}, {18, 17}, {18, 6}};
  std::vector<int> labels{1, 3, 5};
  for (int a = 6; a <= 18; ++a) labels.push_back(a);
  return from_labelled_edges(labels, kEdges, "g2");
}

Graph asym6_fixture() {
  static constexpr Edge kEdges[] = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}, {2, 5}};
  return Graph(6, kEdges, "asym6");
}

Graph g6_fixture() {
  const GroupTable z6 = direct_product(cyclic_group(2), cyclic_group(3));
  const std::string s[] = {"(1,0)", "(0,1)", "(0,2)"};
  return cayley(z6, s).with_name("g6");
}

Graph g24_fixture(bool path_shaped) {
  const GroupTable s4 = symmetric_group(4);
  const std::string literal[] = {"(1 2)", "(2 3)", "(2 4)"};
  const std::string path[] = {"(1 2)", "(2 3)", "(3 4)"};
  return cayley(s4, path_shaped ? std::span<const std::string>(path)
                                : std::span<const std::string>(literal))
      .with_name(path_shaped ? "g24path" : "g24");
}

}  // namespace

Graph standard_family(FamilyKind kind, std::span<const int> sizes) {
  switch (kind) {
    case FamilyKind::kPath: {
      require(sizes.size() == 1 && sizes[0] >= 1, "path needs one size >= 1");
      EdgeList e;
      for (int v = 0; v + 1 < sizes[0]; ++v) e.push_back({v, v + 1});
      return Graph(sizes[0], e, sized_name("path", sizes));
    }
    case FamilyKind::kCycle: {
      require(sizes.size() == 1 && sizes[0] >= 3, "cycle needs one size >= 3");
      EdgeList e;
      for (int v = 0; v < sizes[0]; ++v) e.push_back({v, (v + 1) % sizes[0]});
      return Graph(sizes[0], e, sized_name("cycle", sizes));
    }
    case FamilyKind::kComplete:
    case FamilyKind::kEmpty: {
      const bool full = kind == FamilyKind::kComplete;
      require(sizes.size() == 1 && sizes[0] >= 1,
              std::string(full ? "complete" : "empty") + " needs one size >= 1");
      EdgeList e;
      if (full) {
        for (int u = 0; u < sizes[0]; ++u)
          for (int v = u + 1; v < sizes[0]; ++v) e.push_back({u, v});
      }
      return Graph(sizes[0], e, sized_name(full ? "complete" : "empty", sizes));
    }
    case FamilyKind::kCompleteBipartite: {
      require(sizes.size() == 2 && sizes[0] >= 1 && sizes[1] >= 1,
              "complete bipartite needs two sides >= 1");
      EdgeList e;
      for (int u = 0; u < sizes[0]; ++u)
        for (int v = 0; v < sizes[1]; ++v) e.push_back({u, sizes[0] + v});
      return Graph(sizes[0] + sizes[1], e, sized_name("bipartite", sizes));
    }
  }
  throw Error(ErrorKind::kInvalidParams, "unknown family");
}

Graph path_graph(int n) { return standard_family(FamilyKind::kPath, std::array{n}); }
Graph cycle_graph(int n) { return standard_family(FamilyKind::kCycle, std::array{n}); }
Graph complete_graph(int n) { return standard_family(FamilyKind::kComplete, std::array{n}); }
Graph empty_graph(int n) { return standard_family(FamilyKind::kEmpty, std::array{n}); }
Graph complete_bipartite(int m, int n) {
  return standard_family(FamilyKind::kCompleteBipartite, std::array{m, n});
}

Graph circulant(int n, std::span<const int> connection_set) {
  require(n >= 1 && n <= Graph::kMaxVertices, "circulant order outside 1..64");
  std::vector<bool> in(n, false);
  for (int s : connection_set) {
    if (s <= 0 || s >= n) {
      throw Error(ErrorKind::kInvalidConnectionSet,
                  "connection element " + std::to_string(s) + " not a nonzero residue mod " +
                      std::to_string(n));
    }
    in[s] = true;
  }
  for (int s = 1; s < n; ++s) {
    if (in[s] && !in[n - s]) {
      throw Error(ErrorKind::kNotSymmetric,
                  "connection set has " + std::to_string(s) + " but not " + std::to_string(n - s));
    }
  }
  EdgeList e;
  std::string name = "circulant " + std::to_string(n) + " ";
  bool first = true;
  for (int s = 1; s < n; ++s) {
    if (!in[s]) continue;
    name += (first ? "" : ",") + std::to_string(s);
    first = false;
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (in[(v - u) % n]) e.push_back({u, v});
  Graph g(n, e, name);

  std::vector<std::uint8_t> rot(n);
  for (int v = 0; v < n; ++v) rot[v] = static_cast<std::uint8_t>((v + 1) % n);
  if (!is_automorphism(g, rot)) throw std::logic_error("rotation is not an automorphism");
  return g;
}

Graph figure14_graph() {
  EdgeList e;
  for (int i = 0; i < 7; ++i) {
    e.push_back({i, (i + 1) % 7});
    for (int d : {0, 1, 3}) e.push_back({7 + i, (i + d) % 7});
  }
  return Graph(14, e, "figure14");
}

std::vector<std::string> fixture_names() {
  return {"petersen", "figure14", "g1", "g2", "g6", "g24", "g24path", "asym6"};
}

Graph named_fixture(std::string_view name) {
  if (name == "petersen") return kneser(5, 2).with_name("petersen");
  if (name == "figure14") return figure14_graph();
  if (name == "g1") return g1_fixture();
  if (name == "g2") return g2_fixture();
  if (name == "g6") return g6_fixture();
  if (name == "g24") return g24_fixture(false);
  if (name == "g24path") return g24_fixture(true);
  if (name == "asym6") return asym6_fixture();
  throw Error(ErrorKind::kInvalidParams, "unknown fixture '" + std::string(name) + "'");
}

BigInt path_Phi_closed_form(std::uint64_t n, std::uint64_t k) {
  if (n == 1) {
    throw Error(ErrorKind::kFormulaInapplicable,
                "path formula gives 0 on one vertex, which has k distinguishing colorings");
  }
  require(n >= 1 && k >= 1, "path formula needs n, k >= 1");
  return (power(k, n) - power(k, (n + 1) / 2)) / 2;
}

BigInt complete_Phi_closed_form(std::uint64_t n, std::uint64_t k) {
  require(n >= 1, "complete formula needs n >= 1");
  return binomial(k, n);
}

}  // namespace symbreak
