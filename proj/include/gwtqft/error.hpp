#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gwtqft {

enum class ErrorCode {
  OrderMismatch,
  NotAUnit,
  DomainError,
  NoSquareRoot,
  NotDivisible,
  SeedError,
  NotSemisimple,
  SingularChangeOfBasis,
  InvalidAlgebra,
  TooLarge,
  ParseError,
  IndexError,
};

std::string_view to_string(ErrorCode code);

// Recoverable failure of a computation; the code identifies the violated
// precondition. Internal consistency failures throw std::logic_error instead.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : Error(ErrorCode::ParseError, "at byte " + std::to_string(offset) + ": " + what),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace gwtqft
