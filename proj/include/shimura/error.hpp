#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace shimura {

/// Base of every error raised by the library. Callers that only need to
/// distinguish "bad input" from "bug" can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (zero where nonzero is
/// required, non-squarefree discriminant, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A checked 128-bit operation would have wrapped.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// The obstruction set S(k, q) was requested in the case B splits over k
/// with odd ramification index, where it has no definition.
class UndefinedBranchError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace shimura
