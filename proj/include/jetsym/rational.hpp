#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace jetsym {

/// Arbitrary-precision rational; GMP keeps it canonical (gcd 1, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

/// Base class for all errors raised by the toolkit.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised when a denominator vanishes identically.
class DivisionByZero : public Error {
public:
  using Error::Error;
};

/// Raised when objects living on different charts are combined.
class ChartMismatch : public Error {
public:
  using Error::Error;
};

/// Raised when a computation hits a non-generic configuration.
class GenericityError : public Error {
public:
  using Error::Error;
};

/// Raised when a problem exceeds a configured size budget.
class BudgetExceeded : public Error {
public:
  using Error::Error;
};

/// n/d in canonical form; mpq_class(n, d) alone does not reduce.
inline Rational rat(long n, long d = 1) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "a" or "a/b"; throws Error on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

inline Rational factorial(unsigned n) {
  Integer f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return Rational(f);
}

inline Rational binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

}  // namespace jetsym
