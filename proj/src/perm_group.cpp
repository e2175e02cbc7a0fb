#include "symbreak/perm_group.hpp"

#include <algorithm>
#include <cstring>
#include <functional>
#include <numeric>
#include <string_view>
#include <unordered_set>

#include "symbreak/error.hpp"

namespace symbreak {

PermGroup::PermGroup(int degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
  for (const Permutation& g : generators_) {
    if (g.degree() != degree_) {
      throw Error(ErrorKind::kDegreeError, "generator degree " + std::to_string(g.degree()) +
                                               " differs from group degree " +
                                               std::to_string(degree_));
    }
  }
}

std::uint64_t PermGroup::order() const {
  if (!enumerated_) throw Error(ErrorKind::kNotApplicable, "group has not been enumerated");
  return count_;
}

std::span<const std::uint8_t> PermGroup::element_images(std::size_t i) const {
  return {storage_.data() + i * degree_, static_cast<std::size_t>(degree_)};
}

Permutation PermGroup::element(std::size_t i) const {
  auto images = element_images(i);
  return Permutation(std::vector<std::uint8_t>(images.begin(), images.end()));
}

bool PermGroup::contains(const Permutation& p) const {
  if (!enumerated_) throw Error(ErrorKind::kNotApplicable, "group has not been enumerated");
  if (p.degree() != degree_) return false;
  std::size_t lo = 0;
  std::size_t hi = count_;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    const int c = std::memcmp(element_images(mid).data(), p.images().data(), degree_);
    if (c == 0) return true;
    if (c < 0) lo = mid + 1; else hi = mid;
  }
  return false;
}

namespace {

// Hash set of element indices into a growing packed buffer.
struct PackedKey {
  const std::vector<std::uint8_t>* storage;
  std::size_t width;
  std::string_view view(std::uint32_t i) const {
    return {reinterpret_cast<const char*>(storage->data()) + i * width, width};
  }
};

struct PackedHash {
  PackedKey key;
  std::size_t operator()(std::uint32_t i) const { return std::hash<std::string_view>{}(key.view(i)); }
};

struct PackedEqual {
  PackedKey key;
  bool operator()(std::uint32_t a, std::uint32_t b) const { return key.view(a) == key.view(b); }
};

}  // namespace

PermGroup close_generators(int degree, std::span<const Permutation> generators, std::size_t cap) {
  if (cap < 1) throw Error(ErrorKind::kInvalidParams, "group cap must be at least 1");
  PermGroup group(degree, {generators.begin(), generators.end()});
  const std::size_t width = static_cast<std::size_t>(degree);

  // The slot past the last element is scratch space for the candidate.
  std::vector<std::uint8_t> storage(width);
  std::iota(storage.begin(), storage.end(), 0);
  PackedKey key{&storage, width};
  std::unordered_set<std::uint32_t, PackedHash, PackedEqual> seen(64, PackedHash{key}, PackedEqual{key});
  seen.insert(0);
  std::size_t count = 1;

  // Generators are added one at a time and skipped when the current set (the
  // group of the earlier ones) already holds them. Elements below `processed`
  // have been multiplied by every generator in `used`.
  std::vector<const Permutation*> used;
  std::size_t processed = 0;
  auto multiply = [&](std::size_t i, const Permutation& g) {
    storage.resize((count + 1) * width);
    const std::uint8_t* e = storage.data() + i * width;
    std::uint8_t* out = storage.data() + count * width;
    const std::uint8_t* img = g.images().data();
    for (std::size_t v = 0; v < width; ++v) out[v] = img[e[v]];
    const auto candidate = static_cast<std::uint32_t>(count);
    if (seen.contains(candidate)) return;
    seen.insert(candidate);
    if (++count > cap) {
      throw Error(ErrorKind::kGroupTooLarge,
                  "group order exceeds the enumeration cap of " + std::to_string(cap), cap);
    }
  };
  for (const Permutation& g : group.generators_) {
    storage.resize((count + 1) * width);
    std::memcpy(storage.data() + count * width, g.images().data(), width);
    if (seen.contains(static_cast<std::uint32_t>(count))) continue;
    used.push_back(&g);
    for (std::size_t i = 0; i < processed; ++i) multiply(i, g);
    for (std::size_t head = processed; head < count; ++head)
      for (const Permutation* h : used) multiply(head, *h);
    processed = count;
  }
  storage.resize(count * width);
  seen.clear();

  std::vector<std::uint32_t> index(count);
  std::iota(index.begin(), index.end(), 0);
  std::sort(index.begin(), index.end(), [&](std::uint32_t a, std::uint32_t b) {
    return std::memcmp(storage.data() + a * width, storage.data() + b * width, width) < 0;
  });
  group.storage_.resize(count * width);
  for (std::size_t i = 0; i < count; ++i) {
    std::memcpy(group.storage_.data() + i * width, storage.data() + index[i] * width, width);
  }
  group.count_ = count;
  group.enumerated_ = true;
  return group;
}

std::vector<int> orbits(int degree, std::span<const Permutation> generators) {
  std::vector<int> parent(degree);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Permutation& g : generators) {
    for (int v = 0; v < degree; ++v) {
      const int a = find(v);
      const int b = find(g[v]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<int> label(degree);
  for (int v = 0; v < degree; ++v) label[v] = find(v);
  return label;
}

}  // namespace symbreak
