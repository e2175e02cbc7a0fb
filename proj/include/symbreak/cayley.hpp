#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symbreak/graph.hpp"

namespace symbreak {

// Finite group given by its multiplication table, multiply(a, b) = a·b.
class GroupTable {
 public:
  // Validates closure, identity and inverses exactly; associativity is checked
  // on every triple for orders up to 100 and on a fixed sample beyond.
  explicit GroupTable(std::vector<std::vector<int>> table, std::vector<std::string> labels = {});

  int order() const { return static_cast<int>(table_.size()); }
  int identity() const { return identity_; }
  int multiply(int a, int b) const { return table_[a][b]; }
  int inverse(int a) const { return inverse_[a]; }
  const std::string& label(int a) const { return labels_[a]; }
  // Throws InvalidParams if no element carries the label.
  int index_of(std::string_view label) const;

 private:
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  std::vector<std::string> labels_;
  int identity_ = 0;
};

// Z_m with labels "0".."m-1".
GroupTable cyclic_group(int m);
// Element (a, b) has id a * |B| + b and label "(la,lb)".
GroupTable direct_product(const GroupTable& a, const GroupTable& b);
// Sym(m) on {1..m}: elements in lexicographic order of their one-line form,
// labelled in cycle notation ("()", "(1 2)", "(1 2 3)(4 5)"), with
// (p·q)(x) = p(q(x)).
GroupTable symmetric_group(int m);

// Vertices are the group elements; g ~ h iff g·h^-1 is in S. S must avoid the
// identity (InvalidConnectionSet) and be inverse-closed (NotSymmetric). Right
// multiplication by every element is checked to be an automorphism.
Graph cayley(const GroupTable& group, std::span<const int> connection_set);
Graph cayley(const GroupTable& group, std::span<const std::string> connection_labels);

}  // namespace symbreak
