#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace gri {

enum class ErrorCode {
  InvalidArgument,
  InvalidTable,
  Syntax,
  UnknownGenerator,
  CosetLimitExceeded,
  NotSLC,
  InvalidInvolution,
  InvalidOrientation,
  IncompatibleConfig,
  CharTwoRing,
  BudgetExceeded,
  MismatchedCarrier,
  NotFound,
  Io,
};

const char* to_string(ErrorCode code);

// Every failure raised by the library. `position` is set for syntax errors
// and holds the 0-based character offset into the parsed text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> position = std::nullopt)
      : std::runtime_error(message), code_(code), position_(position) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> position_;
};

}  // namespace gri
