#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace dbs {

using Rational = mpq_class;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (bad index, rank mismatch, invalid word...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A configured enumeration bound was exceeded.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

/// x = [x]_- [x]_0 [x]_+ does not exist: a leading principal minor vanishes.
class DecompositionUndefined : public Error {
 public:
  using Error::Error;
};

/// A pivot vanished while peeling triangular factors off a chart point.
class FactorizationFailed : public Error {
 public:
  using Error::Error;
};

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Accepts "p", "-p", "p/q".  Throws InvalidInput on anything else.
Rational parse_rational(std::string_view text);

/// q^e for a (possibly negative) integer exponent.  q must be nonzero when e < 0.
Rational pow(const Rational& q, long e);

}  // namespace dbs
