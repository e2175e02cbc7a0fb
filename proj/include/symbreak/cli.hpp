#pragma once

#include <ostream>
#include <string_view>

#include "symbreak/graph.hpp"

namespace symbreak {

// "path N" | "cycle N" | "complete N" | "empty N" | "bipartite M N" |
// "circulant N s1,s2,.." | "johnson N K I" | "kneser N K" | "petersen" |
// "g6fixture NAME". Throws Error (InvalidParams for grammar problems).
Graph parse_family_spec(std::string_view spec);

// Exit codes: 0 success, 1 computation error or verification violation,
// 2 usage error. One JSON object is written to out.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace symbreak
