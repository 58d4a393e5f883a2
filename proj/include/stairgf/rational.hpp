#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace stairgf {

using Integer = mpz_class;
using Rational = mpq_class;

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Not enough known coefficients to produce the requested result.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// Input outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Lookup of an unknown catalog entry.
class UnknownNameError : public Error {
 public:
  using Error::Error;
};

/// Builds num/den in canonical form; throws DomainError when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p", "-p" or "p/q".
Rational parse_rational(std::string_view text);

/// "p" for integers, otherwise "p/q".
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

Rational pow(const Rational& base, long exponent);

/// Exact k-th root of a rational, if it exists in Q (sign must allow it).
bool exact_root(const Rational& value, unsigned long k, Rational& root);

}  // namespace stairgf
