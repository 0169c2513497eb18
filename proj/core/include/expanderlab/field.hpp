#pragma once

#include <compare>
#include <cstdint>
#include <ostream>

namespace expanderlab {

/// A residue in [0, p). Used directly in hot loops; FpElem is the checked
/// value type for the public arithmetic surface.
using Residue = std::uint32_t;

bool is_prime(std::uint64_t n);

/// An odd prime 5 <= p < 2^31. Products of two residues fit in 62 bits, so
/// plain 64-bit arithmetic never overflows.
class PrimeModulus {
 public:
  static constexpr std::uint64_t kMin = 5;
  static constexpr std::uint64_t kMax = (std::uint64_t{1} << 31) - 1;

  explicit PrimeModulus(std::uint64_t p);

  std::uint32_t value() const { return p_; }
  /// |F_p^*| = p - 1.
  std::uint32_t group_order() const { return p_ - 1; }

  Residue reduce(std::int64_t x) const {
    const std::int64_t r = x % static_cast<std::int64_t>(p_);
    return static_cast<Residue>(r < 0 ? r + p_ : r);
  }
  Residue add(Residue a, Residue b) const {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue a, Residue b) const { return a >= b ? a - b : a + p_ - b; }
  Residue neg(Residue a) const { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const {
    return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Residue pow(Residue base, std::uint64_t e) const;
  /// Throws DomainError on zero.
  Residue inv(Residue a) const;
  /// a / b; throws DomainError when b == 0.
  Residue div(Residue a, Residue b) const { return mul(a, inv(b)); }

  /// Multiplicative order of a nonzero residue.
  std::uint32_t order(Residue a) const;

  friend bool operator==(const PrimeModulus&, const PrimeModulus&) = default;

 private:
  std::uint32_t p_;
};

/// An element of F_p carrying its modulus.
class FpElem {
 public:
  FpElem(std::int64_t value, PrimeModulus modulus)
      : value_(modulus.reduce(value)), modulus_(modulus) {}

  Residue value() const { return value_; }
  PrimeModulus modulus() const { return modulus_; }
  bool is_zero() const { return value_ == 0; }

  friend FpElem operator+(FpElem a, FpElem b);
  friend FpElem operator-(FpElem a, FpElem b);
  friend FpElem operator*(FpElem a, FpElem b);
  friend FpElem operator/(FpElem a, FpElem b);
  FpElem operator-() const { return FpElem(modulus_.neg(value_), modulus_); }
  FpElem pow(std::uint64_t e) const { return FpElem(modulus_.pow(value_, e), modulus_); }

  friend bool operator==(const FpElem& a, const FpElem& b) {
    return a.modulus_ == b.modulus_ && a.value_ == b.value_;
  }
  friend std::ostream& operator<<(std::ostream& os, const FpElem& x) {
    return os << x.value_ << " (mod " << x.modulus_.value() << ")";
  }

 private:
  Residue value_;
  PrimeModulus modulus_;
};

/// Multiplicative inverse; DomainError for zero.
FpElem mod_inverse(FpElem a);

}  // namespace expanderlab
