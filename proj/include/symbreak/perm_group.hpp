#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "symbreak/permutation.hpp"

namespace symbreak {

inline constexpr std::size_t kDefaultGroupCap = 2'000'000;

// A permutation group given by generators, optionally with every element
// enumerated. Enumerated elements are kept packed (degree bytes each) in
// lexicographic order of their image arrays; element 0 is the identity.
class PermGroup {
 public:
  PermGroup(int degree, std::vector<Permutation> generators);

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  bool enumerated() const { return enumerated_; }
  // Requires enumerated().
  std::uint64_t order() const;
  std::span<const std::uint8_t> element_images(std::size_t i) const;
  Permutation element(std::size_t i) const;
  bool contains(const Permutation& p) const;

 private:
  friend PermGroup close_generators(int, std::span<const Permutation>, std::size_t);

  int degree_;
  std::vector<Permutation> generators_;
  bool enumerated_ = false;
  std::size_t count_ = 0;
  std::vector<std::uint8_t> storage_;
};

// Breadth-first closure of the generators under composition. Throws
// GroupTooLarge (with the cap as its limit) once more than cap elements are
// found, and DegreeError if a generator's degree differs from degree.
PermGroup close_generators(int degree, std::span<const Permutation> generators,
                           std::size_t cap = kDefaultGroupCap);

// Orbit label per point (the smallest point of its orbit) under the group
// generated by the generators.
std::vector<int> orbits(int degree, std::span<const Permutation> generators);

}  // namespace symbreak
