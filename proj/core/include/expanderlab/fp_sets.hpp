#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "expanderlab/fn_form.hpp"
#include "expanderlab/fp_core.hpp"
#include "expanderlab/fp_set.hpp"

namespace expanderlab {

FpSet sumset(const FpSet& a, const FpSet& b);
FpSet productset(const FpSet& a, const FpSet& b);
/// {a - b}
FpSet difference_set(const FpSet& a, const FpSet& b);
/// A^{(k)} = {a^k : a in A}.
FpSet power_set(const FpSet& a, std::uint32_t k);

/// f(A, B) = {f(a, b)}. Zero values are kept: f(A,B) lives in F_p.
FpSet image(const FnForm& f, const FpSet& a, const FpSet& b);

/// Same, for an arbitrary callable (Residue, Residue) -> Residue.
template <class Fn>
FpSet image_of(Fn&& f, const FpSet& a, const FpSet& b) {
  FpSet out(a.modulus());
  a.for_each([&](Residue x) { b.for_each([&](Residue y) { out.insert_residue(f(x, y)); }); });
  return out;
}

/// E(A) = |{(a,b,c,d) in A^4 : ab = cd}| = sum_x r(x)^2.
/// DomainError when A contains 0.
std::uint64_t mult_energy(const FpSet& a);

// Set families used by the sweeps.
struct IntervalFamily {
  std::int64_t start = 1;
  std::uint32_t length = 1;
};
struct GeometricFamily {
  std::int64_t ratio = 2;
  std::uint32_t length = 1;
  std::int64_t start = 1;
};
struct RandomFamily {
  std::uint32_t size = 1;
  std::uint64_t seed = 0;
};
struct SubgroupFamily {
  SubgroupSpec subgroup;
};
using FamilySpec = std::variant<IntervalFamily, GeometricFamily, RandomFamily, SubgroupFamily>;

/// Deterministic set for a given spec. Throws DomainError for infeasible
/// parameters (size beyond p-1, repeated geometric terms, 0 in a
/// nonzero-only set).
FpSet generate(const FamilySpec& spec, PrimeModulus p, bool nonzero_only = true);

/// "interval(1,3)", "geometric(2,4)", "random(5,42)", "subgroup(k=2)".
std::string describe(const FamilySpec& spec);

/// Parses the `describe` syntax back into a spec. DomainError on bad input.
FamilySpec parse_family(const std::string& text);

/// Default structured sets for a prime: intervals from 1 of a few lengths,
/// geometric progressions with ratio 2 and 3, and every subgroup of F_p^*.
std::vector<FamilySpec> structured_families(PrimeModulus p);

}  // namespace expanderlab
