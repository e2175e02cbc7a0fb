#pragma once

#include <span>
#include <vector>

namespace symbreak {

// Vertex coloring with ids 1..palette. Not every id has to be used.
class Coloring {
 public:
  // Throws InvalidParams if an id falls outside 1..palette.
  Coloring(std::vector<int> colors, int palette);
  // Palette is the largest id present.
  explicit Coloring(std::vector<int> colors);

  int size() const { return static_cast<int>(colors_.size()); }
  int palette() const { return palette_; }
  int operator[](int v) const { return colors_[v]; }
  std::span<const int> colors() const { return colors_; }
  // Number of distinct ids present.
  int colors_used() const;
  bool surjective() const { return colors_used() == palette_; }

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<int> colors_;
  int palette_;
};

}  // namespace symbreak
