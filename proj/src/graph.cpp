#include "symbreak/graph.hpp"

#include <bit>
#include <charconv>
#include <sstream>

#include "symbreak/error.hpp"

namespace symbreak {

namespace {

void check_order(int n) {
  if (n < 1 || n > Graph::kMaxVertices) {
    throw Error(ErrorKind::kOutOfRange,
                "vertex count " + std::to_string(n) + " outside 1.." +
                    std::to_string(Graph::kMaxVertices));
  }
}

std::uint64_t low_bits(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

}  // namespace

Graph::Graph(int n, std::span<const Edge> edges, std::string name)
    : name_(std::move(name)) {
  check_order(n);
  rows_.assign(n, 0);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw Error(ErrorKind::kOutOfRange, "edge (" + std::to_string(e.u) + "," +
                                              std::to_string(e.v) + ") has an endpoint outside 0.." +
                                              std::to_string(n - 1));
    }
    if (e.u == e.v) {
      throw Error(ErrorKind::kInvalidEdge, "loop at vertex " + std::to_string(e.u));
    }
    if (adjacent(e.u, e.v)) {
      throw Error(ErrorKind::kDuplicateEdge, "duplicate edge (" + std::to_string(e.u) + "," +
                                                 std::to_string(e.v) + ")");
    }
    rows_[e.u] |= std::uint64_t{1} << e.v;
    rows_[e.v] |= std::uint64_t{1} << e.u;
  }
}

Graph Graph::from_rows(std::vector<std::uint64_t> rows, std::string name) {
  const int n = static_cast<int>(rows.size());
  check_order(n);
  const std::uint64_t all = low_bits(n);
  for (int u = 0; u < n; ++u) {
    if ((rows[u] & ~all) != 0) {
      throw Error(ErrorKind::kOutOfRange, "row " + std::to_string(u) + " has bits beyond n");
    }
    if ((rows[u] >> u) & 1U) {
      throw Error(ErrorKind::kInvalidEdge, "loop at vertex " + std::to_string(u));
    }
    for (int v = u + 1; v < n; ++v) {
      if (((rows[u] >> v) & 1U) != ((rows[v] >> u) & 1U)) {
        throw Error(ErrorKind::kInvalidEdge, "adjacency is not symmetric");
      }
    }
  }
  Graph g;
  g.rows_ = std::move(rows);
  g.name_ = std::move(name);
  return g;
}

int Graph::degree(Vertex v) const { return std::popcount(rows_[v]); }

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> degrees(rows_.size());
  for (int v = 0; v < order(); ++v) degrees[v] = degree(v);
  return degrees;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (std::uint64_t r : rows_) twice += std::popcount(r);
  return twice / 2;
}

EdgeList Graph::edges() const {
  EdgeList out;
  for (int u = 0; u < order(); ++u) {
    for (int v = u + 1; v < order(); ++v) {
      if (adjacent(u, v)) out.push_back({u, v});
    }
  }
  return out;
}

std::uint64_t Graph::vertex_mask() const { return low_bits(order()); }

Graph Graph::with_name(std::string name) const {
  Graph g = *this;
  g.name_ = std::move(name);
  return g;
}

Graph build_graph(int n, std::span<const Edge> edges) { return Graph(n, edges); }

Graph complement(const Graph& g) {
  std::vector<std::uint64_t> rows(g.order());
  const std::uint64_t all = g.vertex_mask();
  for (int v = 0; v < g.order(); ++v) {
    rows[v] = ~g.row(v) & all & ~(std::uint64_t{1} << v);
  }
  return Graph::from_rows(std::move(rows));
}

std::vector<int> union_offsets(std::span<const Graph> parts) {
  std::vector<int> offsets;
  int next = 0;
  for (const Graph& p : parts) {
    offsets.push_back(next);
    next += p.order();
  }
  return offsets;
}

Graph disjoint_union(std::span<const Graph> parts) {
  if (parts.empty()) throw Error(ErrorKind::kEmptyUnion, "disjoint union of zero graphs");
  int total = 0;
  for (const Graph& p : parts) total += p.order();
  check_order(total);
  std::vector<std::uint64_t> rows;
  rows.reserve(total);
  int offset = 0;
  for (const Graph& p : parts) {
    for (int v = 0; v < p.order(); ++v) rows.push_back(p.row(v) << offset);
    offset += p.order();
  }
  return Graph::from_rows(std::move(rows));
}

std::vector<std::uint64_t> components(const Graph& g) {
  std::vector<std::uint64_t> out;
  std::uint64_t unseen = g.vertex_mask();
  while (unseen != 0) {
    std::uint64_t comp = unseen & (~unseen + 1);
    std::uint64_t frontier = comp;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f != 0; f &= f - 1) {
        next |= g.row(std::countr_zero(f));
      }
      frontier = next & ~comp;
      comp |= next;
    }
    out.push_back(comp);
    unseen &= ~comp;
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() == 1; }

Graph induced_subgraph(const Graph& g, std::uint64_t mask) {
  std::vector<int> index(g.order(), -1);
  std::vector<int> kept;
  for (std::uint64_t m = mask & g.vertex_mask(); m != 0; m &= m - 1) {
    const int v = std::countr_zero(m);
    index[v] = static_cast<int>(kept.size());
    kept.push_back(v);
  }
  std::vector<std::uint64_t> rows(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i) {
    for (std::uint64_t r = g.row(kept[i]) & mask; r != 0; r &= r - 1) {
      rows[i] |= std::uint64_t{1} << index[std::countr_zero(r)];
    }
  }
  return Graph::from_rows(std::move(rows));
}

Graph relabel(const Graph& g, std::span<const int> image) {
  if (static_cast<int>(image.size()) != g.order()) {
    throw Error(ErrorKind::kDegreeError, "relabelling has the wrong length");
  }
  std::vector<std::uint64_t> rows(g.order());
  for (int u = 0; u < g.order(); ++u) {
    for (std::uint64_t r = g.row(u); r != 0; r &= r - 1) {
      rows[image[u]] |= std::uint64_t{1} << image[std::countr_zero(r)];
    }
  }
  return Graph::from_rows(std::move(rows), g.name());
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = -1;
  EdgeList edges;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    if (n < 0) {
      if (!(fields >> n)) {
        throw Error(ErrorKind::kParseError, "line " + std::to_string(line_no) + ": expected vertex count");
      }
    } else {
      Edge e;
      if (!(fields >> e.u >> e.v)) {
        throw Error(ErrorKind::kParseError, "line " + std::to_string(line_no) + ": expected \"u v\"");
      }
      edges.push_back(e);
    }
    std::string rest;
    if (fields >> rest) {
      throw Error(ErrorKind::kParseError, "line " + std::to_string(line_no) + ": trailing text");
    }
  }
  if (n < 0) throw Error(ErrorKind::kParseError, "empty edge list");
  return Graph(n, edges);
}

std::string write_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

}  // namespace symbreak
