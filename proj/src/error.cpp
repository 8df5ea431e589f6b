#include "rsinv/error.hpp"

namespace rsinv {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotInvolution: return "NotInvolution";
    case ErrorCode::NotLayered: return "NotLayered";
    case ErrorCode::PatternTooLarge: return "PatternTooLarge";
    case ErrorCode::DuplicateEntry: return "DuplicateEntry";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::InvalidTableau: return "InvalidTableau";
    case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::NotGfkTight: return "NotGfkTight";
    case ErrorCode::Not321Avoiding: return "Not321Avoiding";
    case ErrorCode::Not123Avoiding: return "Not123Avoiding";
    case ErrorCode::TooManyRows: return "TooManyRows";
    case ErrorCode::ShortcutInapplicable: return "ShortcutInapplicable";
  }
  return "Unknown";
}

}  // namespace rsinv
