#include "expanderlab/fp_core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

#include "expanderlab/errors.hpp"
#include "expanderlab/rng.hpp"

namespace expanderlab {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeModulus::PrimeModulus(std::uint64_t p) : p_(static_cast<std::uint32_t>(p)) {
  if (p < kMin || p > kMax || !is_prime(p)) {
    throw DomainError("modulus " + std::to_string(p) + " is not a prime in [5, 2^31)");
  }
}

Residue PrimeModulus::pow(Residue base, std::uint64_t e) const {
  std::uint64_t result = 1 % p_;
  std::uint64_t b = base % p_;
  while (e > 0) {
    if (e & 1U) result = result * b % p_;
    b = b * b % p_;
    e >>= 1;
  }
  return static_cast<Residue>(result);
}

Residue PrimeModulus::inv(Residue a) const {
  if (a % p_ == 0) throw DomainError("zero has no multiplicative inverse");
  // Extended Euclid on (a, p).
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a % p_;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return reduce(t);
}

std::uint32_t PrimeModulus::order(Residue a) const {
  if (a % p_ == 0) throw DomainError("zero has no multiplicative order");
  std::uint32_t n = p_ - 1;
  std::uint32_t ord = n;
  // Strip prime factors of p-1 while a^(ord/q) == 1.
  for (std::uint32_t q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    while (n % q == 0) n /= q;
    while (ord % q == 0 && pow(a, ord / q) == 1) ord /= q;
  }
  if (n > 1) {
    while (ord % n == 0 && pow(a, ord / n) == 1) ord /= n;
  }
  return ord;
}

namespace {
void require_same(const FpElem& a, const FpElem& b) {
  if (!(a.modulus() == b.modulus())) throw DomainError("modulus mismatch");
}
}  // namespace

FpElem operator+(FpElem a, FpElem b) {
  require_same(a, b);
  return FpElem(a.modulus_.add(a.value_, b.value_), a.modulus_);
}
FpElem operator-(FpElem a, FpElem b) {
  require_same(a, b);
  return FpElem(a.modulus_.sub(a.value_, b.value_), a.modulus_);
}
FpElem operator*(FpElem a, FpElem b) {
  require_same(a, b);
  return FpElem(a.modulus_.mul(a.value_, b.value_), a.modulus_);
}
FpElem operator/(FpElem a, FpElem b) {
  require_same(a, b);
  return FpElem(a.modulus_.div(a.value_, b.value_), a.modulus_);
}

FpElem mod_inverse(FpElem a) { return FpElem(a.modulus().inv(a.value()), a.modulus()); }

// --- subgroups --------------------------------------------------------------

FpSet kth_powers(PrimeModulus p, std::uint32_t k) {
  if (k == 0) throw DomainError("k must be positive");
  FpSet out(p, true);
  for (Residue x = 1; x < p.value(); ++x) out.insert_residue(p.pow(x, k));
  return out;
}

FpSet materialize(const SubgroupSpec& spec, PrimeModulus p) {
  struct Visitor {
    PrimeModulus p;
    FpSet operator()(const FullGroup&) const { return FpSet::multiplicative_group(p); }
    FpSet operator()(const KthPowers& k) const { return kth_powers(p, k.k); }
    FpSet operator()(const ExplicitSubgroup& e) const {
      FpSet s(p, true);
      for (auto x : e.elements) {
        if (p.reduce(x) == 0) throw DomainError("subgroup element is zero");
        s.insert(x);
      }
      if (s.empty()) throw DomainError("empty subgroup");
      const auto elems = s.elements();
      for (Residue x : elems) {
        if (!s.contains(p.inv(x))) throw DomainError("subgroup not closed under inversion");
        for (Residue y : elems) {
          if (!s.contains(p.mul(x, y))) {
            throw DomainError("subgroup not closed under multiplication");
          }
        }
      }
      return s;
    }
  };
  return std::visit(Visitor{p}, spec);
}

std::string describe(const SubgroupSpec& spec) {
  struct Visitor {
    std::string operator()(const FullGroup&) const { return "full"; }
    std::string operator()(const KthPowers& k) const { return "k=" + std::to_string(k.k); }
    std::string operator()(const ExplicitSubgroup& e) const {
      std::ostringstream os;
      os << "{";
      for (std::size_t i = 0; i < e.elements.size(); ++i) os << (i ? "," : "") << e.elements[i];
      os << "}";
      return os.str();
    }
  };
  return std::visit(Visitor{}, spec);
}

// --- function tables --------------------------------------------------------

FuncTable::FuncTable(FpSet domain, std::vector<Residue> values)
    : domain_(std::move(domain)), values_(std::move(values)) {
  const auto p = domain_.modulus();
  if (values_.size() != p.value()) throw DomainError("value table must have p entries");
  if (domain_.contains(0)) throw DomainError("function domain must lie in F_p^*");
  for (Residue x = 0; x < p.value(); ++x) {
    if (domain_.contains(x)) {
      if (values_[x] % p.value() == 0) {
        throw DomainError("function value at " + std::to_string(x) + " is zero");
      }
      values_[x] %= p.value();
    } else {
      values_[x] = 0;
    }
  }
}

FuncTable FuncTable::from_function(const FpSet& domain,
                                   const std::function<std::int64_t(Residue)>& fn) {
  const auto p = domain.modulus();
  std::vector<Residue> values(p.value(), 0);
  domain.for_each([&](Residue x) { values[x] = p.reduce(fn(x)); });
  return FuncTable(domain, std::move(values));
}

FuncTable FuncTable::identity(const FpSet& domain) {
  return from_function(domain, [](Residue x) { return x; });
}

FuncTable FuncTable::constant(const FpSet& domain, std::int64_t c) {
  return from_function(domain, [c](Residue) { return c; });
}

FuncTable FuncTable::monomial(const FpSet& domain, std::uint32_t e) {
  const auto p = domain.modulus();
  return from_function(domain, [p, e](Residue x) { return p.pow(x, e); });
}

FuncTable FuncTable::random(const FpSet& domain, std::uint64_t seed) {
  const auto p = domain.modulus();
  Rng rng(seed);
  std::vector<Residue> values(p.value(), 0);
  domain.for_each([&](Residue x) { values[x] = static_cast<Residue>(rng.between(1, p.value() - 1)); });
  return FuncTable(domain, std::move(values));
}

FpSet FuncTable::image() const {
  FpSet out(modulus(), true);
  domain_.for_each([&](Residue x) { out.insert_residue(values_[x]); });
  return out;
}

FuncTable FuncTable::extended(Residue fill) const {
  const auto p = modulus();
  if (fill % p.value() == 0) throw DomainError("fill value must be nonzero");
  std::vector<Residue> values(values_);
  for (Residue x = 1; x < p.value(); ++x) {
    if (values[x] == 0) values[x] = fill % p.value();
  }
  return FuncTable(FpSet::multiplicative_group(p), std::move(values));
}

void FuncTable::throw_outside(Residue x) const {
  throw DomainError("element " + std::to_string(x) + " is outside the function domain");
}

std::uint64_t multiplicity(const FuncTable& t) {
  if (t.domain().empty()) throw DomainError("multiplicity of an empty table");
  std::vector<std::uint64_t> counts(t.modulus().value(), 0);
  std::uint64_t best = 0;
  t.domain().for_each([&](Residue x) { best = std::max(best, ++counts[t.raw(x)]); });
  return best;
}

FuncTable pointwise_product(const FuncTable& g, const FuncTable& h) {
  if (!(g.domain() == h.domain())) throw DomainError("pointwise product needs identical domains");
  const auto p = g.modulus();
  return FuncTable::from_function(g.domain(), [&](Residue x) { return p.mul(g.raw(x), h.raw(x)); });
}

FuncTable square_root_table(PrimeModulus p) {
  FpSet squares(p, true);
  std::vector<Residue> values(p.value(), 0);
  for (Residue r = 1; r <= (p.value() - 1) / 2; ++r) {
    const Residue sq = p.mul(r, r);
    squares.insert_residue(sq);
    values[sq] = r;
  }
  return FuncTable(std::move(squares), std::move(values));
}

}  // namespace expanderlab
