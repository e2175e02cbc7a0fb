#include "symbreak/permutation.hpp"

#include <numeric>

#include "symbreak/error.hpp"

namespace symbreak {

namespace {

void check_bijection(std::span<const int> images) {
  const int n = static_cast<int>(images.size());
  if (n > Permutation::kMaxDegree) {
    throw Error(ErrorKind::kOutOfRange, "permutation degree exceeds 256");
  }
  std::vector<bool> hit(n, false);
  for (int x : images) {
    if (x < 0 || x >= n || hit[x]) {
      throw Error(ErrorKind::kInvalidParams, "image array is not a bijection");
    }
    hit[x] = true;
  }
}

void check_same_degree(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw Error(ErrorKind::kDegreeError, "degree mismatch: " + std::to_string(p.degree()) +
                                             " vs " + std::to_string(q.degree()));
  }
}

}  // namespace

Permutation::Permutation(std::span<const int> images) {
  check_bijection(images);
  images_.assign(images.begin(), images.end());
}

Permutation::Permutation(std::vector<std::uint8_t> images) {
  std::vector<int> wide(images.begin(), images.end());
  check_bijection(wide);
  images_ = std::move(images);
}

Permutation Permutation::identity(int n) {
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  return Permutation(id);
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::vector<bool> used(n, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const int from = cycle[i];
      const int to = cycle[(i + 1) % cycle.size()];
      if (from < 0 || from >= n || used[from]) {
        throw Error(ErrorKind::kInvalidParams, "cycles overlap or leave 0..n-1");
      }
      used[from] = true;
      images[from] = to;
    }
  }
  return Permutation(images);
}

bool Permutation::is_identity() const {
  for (int v = 0; v < degree(); ++v) {
    if (images_[v] != v) return false;
  }
  return true;
}

CycleDecomposition cycles(const Permutation& p) {
  CycleDecomposition out;
  std::vector<bool> seen(p.degree(), false);
  for (int v = 0; v < p.degree(); ++v) {
    if (seen[v]) continue;
    std::vector<int> cycle;
    for (int w = v; !seen[w]; w = p[w]) {
      seen[w] = true;
      cycle.push_back(w);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

namespace detail {

std::size_t raw_cycle_count(std::span<const std::uint8_t> images) {
  std::uint64_t seen[4] = {0, 0, 0, 0};
  std::size_t count = 0;
  for (std::size_t v = 0; v < images.size(); ++v) {
    if ((seen[v >> 6] >> (v & 63)) & 1U) continue;
    ++count;
    for (std::size_t w = v; !((seen[w >> 6] >> (w & 63)) & 1U); w = images[w]) {
      seen[w >> 6] |= std::uint64_t{1} << (w & 63);
    }
  }
  return count;
}

std::uint64_t order(std::span<const std::uint8_t> images) {
  std::uint64_t seen[4] = {0, 0, 0, 0};
  std::uint64_t result = 1;
  for (std::size_t v = 0; v < images.size(); ++v) {
    if ((seen[v >> 6] >> (v & 63)) & 1U) continue;
    std::uint64_t length = 0;
    for (std::size_t w = v; !((seen[w >> 6] >> (w & 63)) & 1U); w = images[w]) {
      seen[w >> 6] |= std::uint64_t{1} << (w & 63);
      ++length;
    }
    result = std::lcm(result, length);
  }
  return result;
}

std::size_t moved_points(std::span<const std::uint8_t> images) {
  std::size_t moved = 0;
  for (std::size_t v = 0; v < images.size(); ++v) moved += images[v] != v;
  return moved;
}

}  // namespace detail

std::size_t raw_cycle_count(const Permutation& p) { return detail::raw_cycle_count(p.images()); }

std::size_t cycle_count(const Permutation& p) {
  return p.is_identity() ? 0 : detail::raw_cycle_count(p.images());
}

Permutation compose(const Permutation& p, const Permutation& q) {
  check_same_degree(p, q);
  std::vector<std::uint8_t> images(p.degree());
  for (int v = 0; v < p.degree(); ++v) images[v] = static_cast<std::uint8_t>(p[q[v]]);
  return Permutation(std::move(images));
}

Permutation inverse(const Permutation& p) {
  std::vector<std::uint8_t> images(p.degree());
  for (int v = 0; v < p.degree(); ++v) images[p[v]] = static_cast<std::uint8_t>(v);
  return Permutation(std::move(images));
}

std::uint64_t order(const Permutation& p) { return detail::order(p.images()); }

std::size_t moved_points(const Permutation& p) { return detail::moved_points(p.images()); }

std::string to_cycle_string(const Permutation& p) {
  std::string out;
  for (const auto& cycle : cycles(p)) {
    if (cycle.size() < 2) continue;
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(cycle[i]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace symbreak
