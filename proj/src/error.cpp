#include "symbreak/error.hpp"

namespace symbreak {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidEdge: return "InvalidEdge";
    case ErrorKind::kOutOfRange: return "OutOfRange";
    case ErrorKind::kDuplicateEdge: return "DuplicateEdge";
    case ErrorKind::kEmptyUnion: return "EmptyUnion";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kUnsupported: return "Unsupported";
    case ErrorKind::kDegreeError: return "DegreeError";
    case ErrorKind::kGroupTooLarge: return "GroupTooLarge";
    case ErrorKind::kSearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorKind::kNoSymmetry: return "NoSymmetry";
    case ErrorKind::kFormulaInapplicable: return "FormulaInapplicable";
    case ErrorKind::kInvalidParams: return "InvalidParams";
    case ErrorKind::kNotSymmetric: return "NotSymmetric";
    case ErrorKind::kInvalidConnectionSet: return "InvalidConnectionSet";
    case ErrorKind::kNotApplicable: return "NotApplicable";
    case ErrorKind::kInvalidComponent: return "InvalidComponent";
    case ErrorKind::kTooLarge: return "TooLarge";
  }
  return "Unknown";
}

}  // namespace symbreak
