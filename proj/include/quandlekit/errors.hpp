#pragma once

#include <stdexcept>
#include <string>

namespace quandlekit {

// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on an argument failed (degree mismatch, point out of range,
// element not in group, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A quandle axiom failed. The message carries the witness.
class AxiomViolation : public Error {
 public:
  using Error::Error;
};

// Malformed text input; the message starts with "line N: " when a line is
// known.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::string const& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A declared property of a catalog record does not hold.
class VerificationError : public Error {
 public:
  using Error::Error;
};

// An enumeration or search would exceed its configured bound.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace quandlekit
