#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "expanderlab/rational.hpp"

namespace expanderlab {

/// Dense univariate polynomial over Q, coefficients low to high.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& leading() const { return c_.back(); }

  Rational operator()(const Rational& x) const;
  double operator()(double x) const;

  QPoly derivative() const;
  QPoly monic() const;

  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const Rational& s, const QPoly& a);
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

  std::string to_string(const char* var = "z") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Quotient and remainder. b must be nonzero.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
/// Monic gcd (zero if both are zero).
QPoly gcd(QPoly a, QPoly b);
/// p / gcd(p, p'), monic.
QPoly squarefree_part(const QPoly& p);

/// Half-open isolating interval (lo, hi] holding exactly one root of a
/// squarefree polynomial, or a degenerate [r, r] when the root is known
/// exactly.
struct RootInterval {
  Rational lo, hi;
  bool exact = false;
  double approx() const;
};

class SturmSequence {
 public:
  explicit SturmSequence(const QPoly& squarefree);
  /// Sign changes at x, zeros skipped.
  int variations(const Rational& x) const;
  /// Distinct roots in (lo, hi].
  int count(const Rational& lo, const Rational& hi) const { return variations(lo) - variations(hi); }
  const QPoly& poly() const { return seq_.front(); }

 private:
  std::vector<QPoly> seq_;
};

/// Isolates every real root of p (made squarefree first), in increasing
/// order, then refines each interval below `width`.
std::vector<RootInterval> isolate_real_roots(const QPoly& p, const Rational& width);

/// Whether the root of `p` isolated by `root` is also a root of `q`. p must be
/// squarefree; decided exactly through gcd(p, q).
bool shares_root(const QPoly& p, const RootInterval& root, const QPoly& q);

/// The rational with smallest denominator in [lo, hi].
Rational simplest_between(const Rational& lo, const Rational& hi);

}  // namespace expanderlab
