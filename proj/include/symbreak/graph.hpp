#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace symbreak {

using Vertex = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
};

using EdgeList = std::vector<Edge>;

// Simple undirected loopless graph on vertices 0..n-1, stored as one 64-bit
// neighbor mask per vertex. Values are immutable once built.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  // Validates every edge: loops, endpoints >= n and repeated pairs throw.
  Graph(int n, std::span<const Edge> edges, std::string name = {});

  // rows[v] is the neighbor mask of v; must be symmetric with a zero diagonal.
  static Graph from_rows(std::vector<std::uint64_t> rows, std::string name = {});

  int order() const { return static_cast<int>(rows_.size()); }
  bool adjacent(Vertex u, Vertex v) const { return (rows_[u] >> v) & 1U; }
  std::uint64_t row(Vertex v) const { return rows_[v]; }
  std::span<const std::uint64_t> rows() const { return rows_; }
  int degree(Vertex v) const;
  std::vector<int> degree_sequence() const;
  std::size_t edge_count() const;
  // Edges with u < v in lexicographic order.
  EdgeList edges() const;
  // Mask with the low n bits set.
  std::uint64_t vertex_mask() const;

  const std::string& name() const { return name_; }
  Graph with_name(std::string name) const;

  // Structural equality; the name label is ignored.
  friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

 private:
  Graph() = default;

  std::vector<std::uint64_t> rows_;
  std::string name_;
};

Graph build_graph(int n, std::span<const Edge> edges);

Graph complement(const Graph& g);

// Vertex blocks are concatenated in input order.
Graph disjoint_union(std::span<const Graph> parts);
// First vertex of each block in disjoint_union(parts).
std::vector<int> union_offsets(std::span<const Graph> parts);

bool is_connected(const Graph& g);
// Vertex masks of the connected components, ordered by smallest vertex.
std::vector<std::uint64_t> components(const Graph& g);
// Subgraph induced by the vertices in mask, relabelled in ascending order.
Graph induced_subgraph(const Graph& g, std::uint64_t mask);
// Graph h with h.adjacent(image[u], image[v]) == g.adjacent(u, v).
Graph relabel(const Graph& g, std::span<const int> image);

// Edge-list text: first line "n", then one "u v" pair per line. Blank lines
// and lines starting with '#' are skipped.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

}  // namespace symbreak
