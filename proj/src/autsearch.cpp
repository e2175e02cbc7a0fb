#include "symbreak/autsearch.hpp"

#include <bit>
#include <optional>

#include "symbreak/error.hpp"

namespace symbreak {

namespace {

bool discrete(const Graph& g, const OrderedPartition& cells) {
  return static_cast<int>(cells.size()) == g.order();
}

std::size_t target_cell(const OrderedPartition& cells) {
  std::size_t best = 0;
  int best_size = 0;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const int size = std::popcount(cells[i]);
    if (size > best_size) {
      best = i;
      best_size = size;
    }
  }
  return best;
}

OrderedPartition individualize(const OrderedPartition& cells, std::size_t target, int v) {
  OrderedPartition out;
  out.reserve(cells.size() + 1);
  out.insert(out.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(target));
  const std::uint64_t bit = std::uint64_t{1} << v;
  out.push_back(bit);
  out.push_back(cells[target] & ~bit);
  out.insert(out.end(), cells.begin() + static_cast<std::ptrdiff_t>(target) + 1, cells.end());
  return out;
}

// Hash of cell sizes and the quotient matrix; equal for nodes related by an
// automorphism.
std::uint64_t node_invariant(const Graph& g, const OrderedPartition& cells) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t x) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  mix(cells.size());
  for (std::uint64_t cell : cells) {
    mix(static_cast<std::uint64_t>(std::popcount(cell)));
    const std::uint64_t row = g.row(std::countr_zero(cell));
    for (std::uint64_t other : cells) mix(static_cast<std::uint64_t>(std::popcount(row & other)));
  }
  return h;
}

class AutomorphismSearch {
 public:
  AutomorphismSearch(const Graph& g, OrderedPartition root) : g_(g) {
    refine_to_equitable(g_, root);
    root_ = std::move(root);
  }

  std::vector<Permutation> run() {
    struct Level {
      OrderedPartition cells;
      std::size_t target;
      int chosen;
    };
    std::vector<Level> levels;
    OrderedPartition node = root_;
    while (true) {
      path_invariants_.push_back(node_invariant(g_, node));
      if (discrete(g_, node)) break;
      const std::size_t t = target_cell(node);
      const int v = std::countr_zero(node[t]);
      levels.push_back({node, t, v});
      node = individualize(node, t, v);
      refine_to_equitable(g_, node);
    }
    first_leaf_ = leaf_order(node);

    std::vector<Permutation> generators;
    for (std::size_t l = levels.size(); l-- > 0;) {
      const Level& level = levels[l];
      for (std::uint64_t m = level.cells[level.target]; m != 0; m &= m - 1) {
        const int w = std::countr_zero(m);
        if (w == level.chosen) continue;
        OrderedPartition child = individualize(level.cells, level.target, w);
        refine_to_equitable(g_, child);
        if (auto found = search(child, l + 1)) generators.push_back(std::move(*found));
      }
    }
    return generators;
  }

 private:
  std::vector<int> leaf_order(const OrderedPartition& cells) const {
    std::vector<int> order;
    order.reserve(cells.size());
    for (std::uint64_t cell : cells) order.push_back(std::countr_zero(cell));
    return order;
  }

  std::optional<Permutation> search(const OrderedPartition& node, std::size_t depth) {
    if (depth >= path_invariants_.size() || node_invariant(g_, node) != path_invariants_[depth]) {
      return std::nullopt;
    }
    if (discrete(g_, node)) {
      const std::vector<int> leaf = leaf_order(node);
      std::vector<std::uint8_t> images(g_.order());
      for (std::size_t i = 0; i < leaf.size(); ++i) {
        images[first_leaf_[i]] = static_cast<std::uint8_t>(leaf[i]);
      }
      if (!is_automorphism(g_, images)) return std::nullopt;
      return Permutation(std::move(images));
    }
    const std::size_t t = target_cell(node);
    for (std::uint64_t m = node[t]; m != 0; m &= m - 1) {
      OrderedPartition child = individualize(node, t, std::countr_zero(m));
      refine_to_equitable(g_, child);
      if (auto found = search(child, depth + 1)) return found;
    }
    return std::nullopt;
  }

  const Graph& g_;
  OrderedPartition root_;
  std::vector<std::uint64_t> path_invariants_;
  std::vector<int> first_leaf_;
};

}  // namespace

void refine_to_equitable(const Graph& g, OrderedPartition& cells) {
  bool changed = true;
  while (changed && !discrete(g, cells)) {
    changed = false;
    for (std::size_t s = 0; s < cells.size(); ++s) {
      const std::uint64_t splitter = cells[s];
      for (std::size_t x = 0; x < cells.size();) {
        const std::uint64_t cell = cells[x];
        if (std::popcount(cell) == 1) {
          ++x;
          continue;
        }
        std::uint64_t by_count[Graph::kMaxVertices + 1] = {};
        int lo = Graph::kMaxVertices;
        int hi = 0;
        for (std::uint64_t m = cell; m != 0; m &= m - 1) {
          const int v = std::countr_zero(m);
          const int c = std::popcount(g.row(v) & splitter);
          by_count[c] |= std::uint64_t{1} << v;
          lo = std::min(lo, c);
          hi = std::max(hi, c);
        }
        if (lo == hi) {
          ++x;
          continue;
        }
        OrderedPartition parts;
        for (int c = lo; c <= hi; ++c) {
          if (by_count[c] != 0) parts.push_back(by_count[c]);
        }
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(x));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(x), parts.begin(), parts.end());
        x += parts.size();
        changed = true;
      }
    }
  }
}

bool is_automorphism(const Graph& g, std::span<const std::uint8_t> images) {
  if (static_cast<int>(images.size()) != g.order()) return false;
  for (int u = 0; u < g.order(); ++u) {
    std::uint64_t mapped = 0;
    for (std::uint64_t r = g.row(u); r != 0; r &= r - 1) {
      mapped |= std::uint64_t{1} << images[std::countr_zero(r)];
    }
    if (mapped != g.row(images[u])) return false;
  }
  return true;
}

PermGroup automorphism_generators(const Graph& g) {
  AutomorphismSearch search(g, OrderedPartition{g.vertex_mask()});
  return PermGroup(g.order(), search.run());
}

PermGroup automorphism_generators(const Graph& g, const Coloring& colors) {
  if (colors.size() != g.order()) {
    throw Error(ErrorKind::kInvalidParams, "coloring has " + std::to_string(colors.size()) +
                                               " entries for " + std::to_string(g.order()) +
                                               " vertices");
  }
  OrderedPartition root;
  for (int c = 1; c <= colors.palette(); ++c) {
    std::uint64_t cell = 0;
    for (int v = 0; v < g.order(); ++v) {
      if (colors[v] == c) cell |= std::uint64_t{1} << v;
    }
    if (cell != 0) root.push_back(cell);
  }
  AutomorphismSearch search(g, std::move(root));
  return PermGroup(g.order(), search.run());
}

PermGroup automorphism_group(const Graph& g, std::size_t cap) {
  const PermGroup gens = automorphism_generators(g);
  return close_generators(g.order(), gens.generators(), cap);
}

bool is_asymmetric(const Graph& g) { return automorphism_generators(g).generators().empty(); }

bool isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  if (2 * g.order() > Graph::kMaxVertices) {
    throw Error(ErrorKind::kTooLarge, "isomorphism test needs 2n <= 64 vertices");
  }
  const bool g_connected = is_connected(g);
  if (g_connected != is_connected(h)) {
    return false;
  }
  // The complement of a disconnected graph is connected.
  const Graph a = g_connected ? g : complement(g);
  const Graph b = g_connected ? h : complement(h);
  const Graph parts[] = {a, b};
  const Graph joined = disjoint_union(parts);
  const PermGroup gens = automorphism_generators(joined);
  // Connected blocks: an automorphism moving a vertex of the first block into
  // the second maps the whole block onto it.
  const std::vector<int> orbit = orbits(joined.order(), gens.generators());
  for (int v = a.order(); v < joined.order(); ++v) {
    if (orbit[v] == orbit[0]) return true;
  }
  return false;
}

}  // namespace symbreak
