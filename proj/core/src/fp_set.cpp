#include "expanderlab/fp_set.hpp"

#include <sstream>

#include "expanderlab/errors.hpp"

namespace expanderlab {

FpSet::FpSet(PrimeModulus modulus, bool nonzero_only)
    : modulus_(modulus), nonzero_only_(nonzero_only), words_((modulus.value() + 63) / 64, 0) {}

FpSet::FpSet(PrimeModulus modulus, std::initializer_list<std::int64_t> members, bool nonzero_only)
    : FpSet(modulus, nonzero_only) {
  for (auto x : members) insert(x);
}

FpSet FpSet::from_residues(PrimeModulus modulus, std::span<const Residue> members,
                           bool nonzero_only) {
  FpSet s(modulus, nonzero_only);
  for (auto x : members) s.insert(x);
  return s;
}

FpSet FpSet::multiplicative_group(PrimeModulus modulus) {
  FpSet s(modulus, true);
  for (Residue x = 1; x < modulus.value(); ++x) s.insert_residue(x);
  return s;
}

FpSet FpSet::whole_field(PrimeModulus modulus) {
  FpSet s(modulus, false);
  for (Residue x = 0; x < modulus.value(); ++x) s.insert_residue(x);
  return s;
}

void FpSet::insert(std::int64_t x) { insert_residue(modulus_.reduce(x)); }

void FpSet::erase(Residue x) {
  if (contains(x)) {
    words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63));
    --size_;
  }
}

std::vector<Residue> FpSet::elements() const {
  std::vector<Residue> out;
  out.reserve(size_);
  for_each([&](Residue x) { out.push_back(x); });
  return out;
}

void FpSet::require_same_modulus(const FpSet& other) const {
  if (!(modulus_ == other.modulus_)) throw DomainError("modulus mismatch");
}

bool FpSet::is_subset_of(const FpSet& other) const {
  require_same_modulus(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

FpSet FpSet::set_union(const FpSet& other) const {
  require_same_modulus(other);
  FpSet out(modulus_, nonzero_only_ && other.nonzero_only_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    out.words_[i] = words_[i] | other.words_[i];
    out.size_ += static_cast<std::size_t>(std::popcount(out.words_[i]));
  }
  return out;
}

FpSet FpSet::set_intersection(const FpSet& other) const {
  require_same_modulus(other);
  FpSet out(modulus_, nonzero_only_ || other.nonzero_only_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    out.words_[i] = words_[i] & other.words_[i];
    out.size_ += static_cast<std::size_t>(std::popcount(out.words_[i]));
  }
  return out;
}

bool FpSet::is_saturated() const {
  return size_ == (nonzero_only_ ? modulus_.value() - 1 : modulus_.value());
}

std::string FpSet::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for_each([&](Residue x) {
    os << (first ? "" : ",") << x;
    first = false;
  });
  os << "}";
  return os.str();
}

void FpSet::throw_zero() { throw DomainError("0 cannot belong to a subset of F_p^*"); }

}  // namespace expanderlab
