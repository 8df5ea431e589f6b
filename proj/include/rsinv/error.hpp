#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rsinv {

enum class ErrorCode {
  InvalidPermutation,
  ParseError,
  InvalidArgument,
  NotInvolution,
  NotLayered,
  PatternTooLarge,
  DuplicateEntry,
  ShapeMismatch,
  InvalidTableau,
  InstanceTooLarge,
  NotGfkTight,
  Not321Avoiding,
  Not123Avoiding,
  TooManyRows,
  ShortcutInapplicable,
};

std::string_view to_string(ErrorCode code);

/// Domain error raised by every operation in the library. The code identifies
/// which precondition failed; what() carries a human readable message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rsinv
