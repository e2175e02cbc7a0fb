#pragma once

#include <string>
#include <string_view>

#include "symbreak/graph.hpp"

namespace symbreak {

// Short-form graph6 only: one header byte n + 63, then the upper triangle in
// column order (0,1),(0,2),(1,2),(0,3),... packed six bits per byte, most
// significant bit first, each byte offset by 63.
inline constexpr int kGraph6MaxOrder = 62;

// Throws ParseError on malformed text and Unsupported for the long form.
// A single trailing newline is tolerated.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

}  // namespace symbreak
