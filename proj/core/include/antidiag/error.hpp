#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace antidiag {

enum class ErrorCode {
  ClosureExceedsCap,
  InvalidPermutation,
  NotLatinSquare,
  NoIdentity,
  NotAssociative,
  InvalidParams,
  NotNormal,
  CapExceeded,
  NoPrimeFound,
  DegenerateEigenspace,
  IllConditioned,
  InvalidArgs,
  UnsupportedFamily,
  HypothesisViolated,
  ParseError,
  DuplicateName,
  Io,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (and tests) can branch on the kind of failure, not the text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace antidiag
