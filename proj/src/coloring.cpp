#include "symbreak/coloring.hpp"

#include <algorithm>

#include "symbreak/error.hpp"

namespace symbreak {

Coloring::Coloring(std::vector<int> colors, int palette)
    : colors_(std::move(colors)), palette_(palette) {
  if (palette_ < 1) throw Error(ErrorKind::kInvalidParams, "palette must be at least 1");
  for (int c : colors_) {
    if (c < 1 || c > palette_) {
      throw Error(ErrorKind::kInvalidParams,
                  "color " + std::to_string(c) + " outside 1.." + std::to_string(palette_));
    }
  }
}

Coloring::Coloring(std::vector<int> colors)
    : Coloring(colors, colors.empty() ? 1 : std::max(1, *std::max_element(colors.begin(), colors.end()))) {}

int Coloring::colors_used() const {
  std::vector<bool> present(palette_ + 1, false);
  int used = 0;
  for (int c : colors_) {
    if (!present[c]) {
      present[c] = true;
      ++used;
    }
  }
  return used;
}

}  // namespace symbreak
