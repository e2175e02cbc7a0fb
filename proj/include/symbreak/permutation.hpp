#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace symbreak {

// Permutation of the points 0..n-1 given by its image array, images[v] = p(v).
// Points are stored as bytes, so the degree is capped at 256.
class Permutation {
 public:
  static constexpr int kMaxDegree = 256;

  Permutation() = default;
  // Throws InvalidParams unless images is a bijection of 0..n-1.
  explicit Permutation(std::span<const int> images);
  explicit Permutation(std::vector<std::uint8_t> images);

  static Permutation identity(int n);
  // Points not mentioned in any cycle are fixed.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int v) const { return images_[v]; }
  std::span<const std::uint8_t> images() const { return images_; }
  std::vector<int> image_vector() const { return {images_.begin(), images_.end()}; }
  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<std::uint8_t> images_;
};

// Each cycle starts at its smallest point and lists the base in traversal
// order; cycles are sorted by their first point. Fixed points are included.
using CycleDecomposition = std::vector<std::vector<int>>;

CycleDecomposition cycles(const Permutation& p);

// Number of cycles, fixed points included, except that the identity counts 0.
std::size_t cycle_count(const Permutation& p);
// Number of cycles with no special case: n for the identity.
std::size_t raw_cycle_count(const Permutation& p);

// compose(p, q)(v) = p(q(v)). Throws DegreeError on mismatched degrees.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
// Least m >= 1 with p^m = id, the lcm of the cycle lengths.
std::uint64_t order(const Permutation& p);
std::size_t moved_points(const Permutation& p);

// "(0 1)(2 3 4)"; fixed points are omitted and the identity prints as "()".
std::string to_cycle_string(const Permutation& p);

namespace detail {
// Span versions used on packed group storage.
std::size_t raw_cycle_count(std::span<const std::uint8_t> images);
std::uint64_t order(std::span<const std::uint8_t> images);
std::size_t moved_points(std::span<const std::uint8_t> images);
}  // namespace detail

}  // namespace symbreak
