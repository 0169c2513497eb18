#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "expanderlab/field.hpp"
#include "expanderlab/fp_set.hpp"

namespace expanderlab {

/// Multiplicative subgroups of F_p^*.
struct FullGroup {};
struct KthPowers {
  std::uint32_t k = 1;
};
struct ExplicitSubgroup {
  std::vector<std::int64_t> elements;
};
using SubgroupSpec = std::variant<FullGroup, KthPowers, ExplicitSubgroup>;

/// Materialises a subgroup. Explicit lists are checked for closure under
/// multiplication and inversion; failures raise DomainError.
FpSet materialize(const SubgroupSpec& spec, PrimeModulus p);
std::string describe(const SubgroupSpec& spec);

/// {x^k : x in F_p^*}, a subgroup of order (p-1)/gcd(k, p-1).
FpSet kth_powers(PrimeModulus p, std::uint32_t k);

/// A function from a subset of F_p^* into F_p^*.
///
/// Values are stored densely by residue; 0 marks "outside the domain", which
/// is unambiguous because every image is nonzero.
class FuncTable {
 public:
  /// `values[x]` is the image of x for x in `domain`. Throws DomainError if
  /// the domain contains 0, an image is zero, or the vector has the wrong size.
  FuncTable(FpSet domain, std::vector<Residue> values);

  static FuncTable from_function(const FpSet& domain,
                                 const std::function<std::int64_t(Residue)>& fn);
  static FuncTable identity(const FpSet& domain);
  static FuncTable constant(const FpSet& domain, std::int64_t c);
  /// x -> x^e.
  static FuncTable monomial(const FpSet& domain, std::uint32_t e);
  /// Uniform random nonzero images, reproducible from `seed`.
  static FuncTable random(const FpSet& domain, std::uint64_t seed);

  const FpSet& domain() const { return domain_; }
  PrimeModulus modulus() const { return domain_.modulus(); }

  bool defines(Residue x) const { return x < values_.size() && values_[x] != 0; }
  /// Throws DomainError outside the domain.
  Residue operator()(Residue x) const {
    if (!defines(x)) throw_outside(x);
    return values_[x];
  }
  /// Unchecked lookup; 0 outside the domain.
  Residue raw(Residue x) const { return values_[x]; }

  FpSet image() const;
  /// The same function on F_p^*, using `fill` where this table is undefined.
  FuncTable extended(Residue fill = 1) const;

  friend bool operator==(const FuncTable&, const FuncTable&) = default;

 private:
  [[noreturn]] void throw_outside(Residue x) const;

  FpSet domain_;
  std::vector<Residue> values_;
};

/// mu(g) = max_t |{x : g(x) = t}|. DomainError on an empty domain.
std::uint64_t multiplicity(const FuncTable& t);

/// (g*h)(x) = g(x) h(x). DomainError when the domains differ.
FuncTable pointwise_product(const FuncTable& g, const FuncTable& h);

/// The square-root map on the nonzero squares: g(r^2) = r for
/// r in R = {1, ..., (p-1)/2}. Since 0 < r_i + r_j < p and
/// 0 < |r_i - r_j| < p for distinct r_i, r_j in R, the choice of R meets the
/// requirement r_i +- r_j != 0.
FuncTable square_root_table(PrimeModulus p);

}  // namespace expanderlab
