#include "symbreak/graph6.hpp"

#include "symbreak/error.hpp"

namespace symbreak {

namespace {

bool is_digit6(char c) { return c >= 63 && c <= 126; }

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
  if (text.empty()) throw Error(ErrorKind::kParseError, "empty graph6 string");
  for (char c : text) {
    if (!is_digit6(c)) {
      throw Error(ErrorKind::kParseError, "byte outside the printable graph6 range");
    }
  }
  if (text[0] == '~') {
    // "~" + three digits is a well-formed header for 63 <= n <= 258047.
    if (text.size() >= 4 && text[1] != '~') {
      throw Error(ErrorKind::kUnsupported, "long-form graph6 (n > 62) is not supported");
    }
    throw Error(ErrorKind::kParseError, "header byte invalid for short form");
  }
  const int n = text[0] - 63;
  if (n < 1) throw Error(ErrorKind::kParseError, "graph6 header encodes zero vertices");
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() != body + 1) {
    throw Error(ErrorKind::kParseError, "graph6 body has " + std::to_string(text.size() - 1) +
                                            " bytes, expected " + std::to_string(body));
  }
  std::vector<std::uint64_t> rows(n, 0);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = text[1 + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) {
        rows[i] |= std::uint64_t{1} << j;
        rows[j] |= std::uint64_t{1} << i;
      }
    }
  }
  for (; k < body * 6; ++k) {
    if (((text[1 + k / 6] - 63) >> (5 - k % 6)) & 1) {
      throw Error(ErrorKind::kParseError, "nonzero padding bits");
    }
  }
  return Graph::from_rows(std::move(rows));
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder) {
    throw Error(ErrorKind::kUnsupported, "graph6 short form holds at most 62 vertices");
  }
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::string out(1 + (bits + 5) / 6, '\0');
  out[0] = static_cast<char>(n + 63);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (g.adjacent(i, j)) out[1 + k / 6] = static_cast<char>(out[1 + k / 6] | (1 << (5 - k % 6)));
    }
  }
  for (std::size_t b = 1; b < out.size(); ++b) out[b] = static_cast<char>(out[b] + 63);
  return out;
}

}  // namespace symbreak
