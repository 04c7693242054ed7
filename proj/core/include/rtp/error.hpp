#pragma once

#include <stdexcept>
#include <string>

namespace rtp {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input (rationals, sequences, files).
class ParseError : public Error {
 public:
  using Error::Error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A coefficient was requested beyond the order a series was truncated to.
class TruncationError : public Error {
 public:
  using Error::Error;
};

// A requested factorization or linear system has no solution at this truncation.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// An exhaustive enumeration would exceed its configured cap.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

// A constructed object failed its own self-verification.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace rtp
