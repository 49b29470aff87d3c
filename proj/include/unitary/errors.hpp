#pragma once

#include <stdexcept>
#include <string>

namespace unitary {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A 64-bit product or sum would have wrapped around.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// An argument is outside the operation's domain (n too small, negative z, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The requested argument needs a larger prime sieve than the one supplied.
class SieveLimitError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The request is well-formed but exceeds a configured work cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace unitary
