#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ordlat {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on an argument was violated (n = 0, non-prime p, factor <= 1).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A configured size cap (divisor count, carrier size, enumeration size) was exceeded.
class SizeError : public Error {
 public:
  using Error::Error;
};

// Malformed textual input. `position` is a 0-based character offset.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error("at column " + std::to_string(position + 1) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

enum class NotRealizableReason {
  kMalformedEntry,       // order 0, count 0, or duplicate order
  kBadIdentity,          // no entry at order 1, or its count is not 1
  kNonPowerCumulative,   // some cumulative p-power count is not a power of p
  kNonMonotoneConjugate, // #{i : alpha_i >= a} would increase with a
  kMissingPrimePower,    // a prime divides some order but no p^a is listed
  kSpectrumMismatch,     // forward spectrum of the candidate group differs
};

const char* reason_code(NotRealizableReason reason) noexcept;

// The order counts belong to no finite abelian group.
class NotRealizable : public Error {
 public:
  NotRealizable(NotRealizableReason reason, const std::string& detail)
      : Error(std::string(reason_code(reason)) + ": " + detail), reason_(reason) {}

  NotRealizableReason reason() const noexcept { return reason_; }

 private:
  NotRealizableReason reason_;
};

}  // namespace ordlat
