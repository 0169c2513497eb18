#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace expanderlab {

/// Exact arbitrary-precision rational.
using Rational = mpq_class;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  Rational q(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  q.canonicalize();
  return q;
}

/// "n" or "n/d" in lowest terms.
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// q^e for integer e (negative exponents invert; 0^e with e < 0 is the
/// caller's problem).
Rational rational_pow(const Rational& q, long e);

bool is_integer(const Rational& q);

}  // namespace expanderlab
