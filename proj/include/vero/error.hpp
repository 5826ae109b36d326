#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vero {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial or list text. `position()` is a byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Operands live in different rings, or a monomial has the wrong arity.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// Coefficient domain is not acceptable for the requested operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A precondition on the arguments failed.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The input exceeds a documented size cap.
class ResourceCapError : public Error {
 public:
  using Error::Error;
};

}  // namespace vero
