#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace symbreak {

enum class ErrorKind {
  kInvalidEdge,
  kOutOfRange,
  kDuplicateEdge,
  kEmptyUnion,
  kParseError,
  kUnsupported,
  kDegreeError,
  kGroupTooLarge,
  kSearchBudgetExceeded,
  kNoSymmetry,
  kFormulaInapplicable,
  kInvalidParams,
  kNotSymmetric,
  kInvalidConnectionSet,
  kNotApplicable,
  kInvalidComponent,
  kTooLarge,
};

// Stable identifier used in JSON error payloads, e.g. "GroupTooLarge".
std::string_view error_kind_name(ErrorKind kind);

// Every recoverable failure in the library is reported as an Error. The
// optional limit carries the cap/budget that was exceeded, if any.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::uint64_t limit = 0)
      : std::runtime_error(message), kind_(kind), limit_(limit) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  ErrorKind kind_;
  std::uint64_t limit_;
};

}  // namespace symbreak
