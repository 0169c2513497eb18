#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "expanderlab/field.hpp"

namespace expanderlab {

/// A subset of F_p stored as a bit array of length p.
///
/// When `nonzero_only` is set the set models a subset of F_p^* and refuses
/// to hold 0. The cardinality is cached and always equals the popcount of
/// the membership words.
class FpSet {
 public:
  explicit FpSet(PrimeModulus modulus, bool nonzero_only = false);
  FpSet(PrimeModulus modulus, std::initializer_list<std::int64_t> members,
        bool nonzero_only = false);
  static FpSet from_residues(PrimeModulus modulus, std::span<const Residue> members,
                             bool nonzero_only = false);
  /// F_p^* as a nonzero-only set.
  static FpSet multiplicative_group(PrimeModulus modulus);
  /// All of F_p.
  static FpSet whole_field(PrimeModulus modulus);

  PrimeModulus modulus() const { return modulus_; }
  bool nonzero_only() const { return nonzero_only_; }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool contains(Residue x) const {
    return x < modulus_.value() && ((words_[x >> 6] >> (x & 63)) & 1U) != 0;
  }
  /// Inserts x mod p. Throws DomainError for 0 in a nonzero-only set.
  void insert(std::int64_t x);
  void insert_residue(Residue x) {
    std::uint64_t& w = words_[x >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (x & 63);
    if ((w & bit) == 0) {
      if (x == 0 && nonzero_only_) throw_zero();
      w |= bit;
      ++size_;
    }
  }
  void erase(Residue x);

  /// Calls fn(Residue) for every member in increasing order.
  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        const int bit = std::countr_zero(w);
        fn(static_cast<Residue>(i * 64 + static_cast<std::size_t>(bit)));
        w &= w - 1;
      }
    }
  }
  std::vector<Residue> elements() const;

  bool is_subset_of(const FpSet& other) const;
  FpSet set_union(const FpSet& other) const;
  FpSet set_intersection(const FpSet& other) const;
  /// True when the set is F_p (or F_p^* for a nonzero-only set).
  bool is_saturated() const;

  /// "{1,2,4}"
  std::string to_string() const;

  friend bool operator==(const FpSet& a, const FpSet& b) {
    return a.modulus_ == b.modulus_ && a.words_ == b.words_;
  }

 private:
  [[noreturn]] static void throw_zero();
  void require_same_modulus(const FpSet& other) const;

  PrimeModulus modulus_;
  bool nonzero_only_;
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace expanderlab
