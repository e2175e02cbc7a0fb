#include "symbreak/cayley.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "symbreak/autsearch.hpp"
#include "symbreak/error.hpp"
#include "symbreak/permutation.hpp"

namespace symbreak {

namespace {

void bad_table(const std::string& what) { throw Error(ErrorKind::kInvalidParams, what); }

}  // namespace

GroupTable::GroupTable(std::vector<std::vector<int>> table, std::vector<std::string> labels)
    : table_(std::move(table)), labels_(std::move(labels)) {
  const int m = order();
  if (m < 1 || m > Graph::kMaxVertices) bad_table("group order outside 1..64");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != m) bad_table("multiplication table is not square");
    for (int x : row)
      if (x < 0 || x >= m) bad_table("table entry out of range");
  }
  if (labels_.empty()) {
    for (int a = 0; a < m; ++a) labels_.push_back(std::to_string(a));
  }
  if (static_cast<int>(labels_.size()) != m) bad_table("label count differs from group order");

  identity_ = -1;
  for (int e = 0; e < m && identity_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < m && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) bad_table("no identity element");

  inverse_.assign(m, -1);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (table_[a][b] == identity_ && table_[b][a] == identity_) {
        inverse_[a] = b;
        break;
      }
    }
    if (inverse_[a] < 0) bad_table("element " + labels_[a] + " has no inverse");
  }

  auto assoc = [&](int a, int b, int c) {
    if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
      bad_table("associativity fails at (" + labels_[a] + "," + labels_[b] + "," + labels_[c] + ")");
    }
  };
  if (m <= 100) {
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        for (int c = 0; c < m; ++c) assoc(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<int> pick(0, m - 1);
    for (int t = 0; t < 100000; ++t) assoc(pick(rng), pick(rng), pick(rng));
  }
}

int GroupTable::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) {
    throw Error(ErrorKind::kInvalidParams, "no group element labelled '" + std::string(label) + "'");
  }
  return static_cast<int>(it - labels_.begin());
}

GroupTable cyclic_group(int m) {
  if (m < 1) bad_table("cyclic group needs m >= 1");
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) t[a][b] = (a + b) % m;
  return GroupTable(std::move(t));
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
  const int ma = a.order(), mb = b.order();
  if (ma * mb > Graph::kMaxVertices) bad_table("direct product larger than 64 elements");
  const int m = ma * mb;
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  std::vector<std::string> labels(m);
  for (int x = 0; x < m; ++x) {
    labels[x] = "(" + a.label(x / mb) + "," + b.label(x % mb) + ")";
    for (int y = 0; y < m; ++y) {
      t[x][y] = a.multiply(x / mb, y / mb) * mb + b.multiply(x % mb, y % mb);
    }
  }
  return GroupTable(std::move(t), std::move(labels));
}

GroupTable symmetric_group(int m) {
  if (m < 1 || m > 5) bad_table("symmetric group table supports 1 <= m <= 5");
  std::vector<std::vector<int>> elems;
  std::vector<int> p(m);
  std::iota(p.begin(), p.end(), 0);
  do elems.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  const int size = static_cast<int>(elems.size());
  std::vector<std::string> labels;
  for (const auto& e : elems) {
    std::string s;
    for (const auto& cyc : cycles(Permutation(std::span<const int>(e)))) {
      if (cyc.size() < 2) continue;
      s += "(";
      for (std::size_t j = 0; j < cyc.size(); ++j) s += (j ? " " : "") + std::to_string(cyc[j] + 1);
      s += ")";
    }
    labels.push_back(s.empty() ? "()" : s);
  }
  std::vector<std::vector<int>> t(size, std::vector<int>(size));
  std::vector<int> prod(m);
  for (int x = 0; x < size; ++x) {
    for (int y = 0; y < size; ++y) {
      for (int v = 0; v < m; ++v) prod[v] = elems[x][elems[y][v]];
      t[x][y] = static_cast<int>(std::lower_bound(elems.begin(), elems.end(), prod) - elems.begin());
    }
  }
  return GroupTable(std::move(t), std::move(labels));
}

Graph cayley(const GroupTable& group, std::span<const int> connection_set) {
  const int m = group.order();
  std::vector<bool> in(m, false);
  for (int s : connection_set) {
    if (s < 0 || s >= m) {
      throw Error(ErrorKind::kInvalidConnectionSet, "element id " + std::to_string(s) + " out of range");
    }
    if (s == group.identity()) {
      throw Error(ErrorKind::kInvalidConnectionSet, "connection set contains the identity");
    }
    in[s] = true;
  }
  for (int s = 0; s < m; ++s) {
    if (in[s] && !in[group.inverse(s)]) {
      throw Error(ErrorKind::kNotSymmetric,
                  "connection set has " + group.label(s) + " but not its inverse");
    }
  }
  EdgeList e;
  for (int g = 0; g < m; ++g)
    for (int h = g + 1; h < m; ++h)
      if (in[group.multiply(g, group.inverse(h))]) e.push_back({g, h});
  Graph graph(m, e);

  // g·h^-1 is unchanged when both sides are multiplied by x on the right.
  std::vector<std::uint8_t> img(m);
  for (int x = 0; x < m; ++x) {
    for (int g = 0; g < m; ++g) img[g] = static_cast<std::uint8_t>(group.multiply(g, x));
    if (!is_automorphism(graph, img)) throw std::logic_error("right translation is not an automorphism");
  }
  return graph;
}

Graph cayley(const GroupTable& group, std::span<const std::string> connection_labels) {
  std::vector<int> ids;
  for (const auto& l : connection_labels) ids.push_back(group.index_of(l));
  return cayley(group, ids);
}

}  // namespace symbreak
