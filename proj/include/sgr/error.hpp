#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sgr {

enum class Errc {
  DanglingEdge,
  DuplicatePortLabel,
  DuplicateId,
  ParentMismatch,
  HostContainsVariables,
  IllegalMorphism,
  UnwiredBoundaryEdge,
  InvalidRule,
  SyntaxError,
  UnknownRule,
  BadProbabilities,
  UnknownFunction,
  DuplicateFunction,
  LimitExceeded,
  Diverged,
  Stuck,
  InvariantViolation,
  InputError,
};

std::string_view to_string(Errc code);

/// Every library failure is reported as an `Error` carrying a code; callers
/// that need to branch on the failure kind switch on `code()`.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Parse failure with a 1-based source position.
class SyntaxError : public Error {
 public:
  SyntaxError(int line, int column, std::vector<std::string> expected,
              const std::string& found);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  int line_;
  int column_;
  std::vector<std::string> expected_;
};

}  // namespace sgr
