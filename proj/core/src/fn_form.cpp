#include "expanderlab/fn_form.hpp"

#include "expanderlab/errors.hpp"

namespace expanderlab {

namespace {

void require_modulus(PrimeModulus p, const FuncTable& t) {
  if (!(t.modulus() == p)) throw DomainError("function table modulus mismatch");
}

}  // namespace

FnForm FnForm::general(FuncTable g, FuncTable h, std::optional<FuncTable> g_prime) {
  const auto p = g.modulus();
  require_modulus(p, h);
  if (g_prime) require_modulus(p, *g_prime);
  return FnForm(p, General{std::move(g), std::move(g_prime), std::move(h)});
}

FnForm FnForm::power(PrimeModulus p, std::uint32_t u, std::uint32_t v, std::uint32_t k) {
  return FnForm(p, Power{u, v, k});
}

FnForm FnForm::weighted(FuncTable g, FuncTable h, std::uint32_t k) {
  const auto p = g.modulus();
  require_modulus(p, h);
  return FnForm(p, Weighted{std::move(g), std::move(h), k});
}

FnForm FnForm::product_shift(FnForm base, FuncTable w) {
  const auto p = base.modulus();
  require_modulus(p, w);
  return FnForm(p, ProductShift{std::make_shared<const FnForm>(std::move(base)), std::move(w)});
}

FnForm FnForm::sum_shift(FnForm base, FuncTable w) {
  const auto p = base.modulus();
  require_modulus(p, w);
  return FnForm(p, SumShift{std::make_shared<const FnForm>(std::move(base)), std::move(w)});
}

FnForm FnForm::x_times_x_plus_y(PrimeModulus p) {
  const auto units = FpSet::multiplicative_group(p);
  return general(FuncTable::identity(units), FuncTable::identity(units));
}

FnForm FnForm::xy_times_x_plus_y(PrimeModulus p) { return power(p, 1, 1, 1); }

Residue FnForm::operator()(Residue x, Residue y) const {
  const PrimeModulus p = modulus_;
  struct Visitor {
    PrimeModulus p;
    Residue x, y;
    Residue operator()(const General& f) const {
      Residue r = p.mul(f.g(x), p.add(f.h(x), y));
      if (f.g_prime) r = p.mul(r, (*f.g_prime)(y));
      return r;
    }
    Residue operator()(const Power& f) const {
      return p.mul(p.mul(p.pow(x, f.u), p.pow(y, f.v)), p.add(p.pow(x, f.k), p.pow(y, f.k)));
    }
    Residue operator()(const Weighted& f) const {
      return p.mul(p.mul(f.g(x), f.h(y)), p.add(p.pow(x, f.k), p.pow(y, f.k)));
    }
    Residue operator()(const ProductShift& f) const { return p.mul(f.w(x), (*f.base)(x, y)); }
    Residue operator()(const SumShift& f) const { return p.add(f.w(x), (*f.base)(x, y)); }
  };
  return std::visit(Visitor{p, x % p.value(), y % p.value()}, form_);
}

std::string FnForm::name() const {
  struct Visitor {
    std::string operator()(const General& f) const {
      return f.g_prime ? "g(x)g'(y)(h(x)+y)" : "g(x)(h(x)+y)";
    }
    std::string operator()(const Power& f) const {
      return "x^" + std::to_string(f.u) + "y^" + std::to_string(f.v) + "(x^" + std::to_string(f.k) +
             "+y^" + std::to_string(f.k) + ")";
    }
    std::string operator()(const Weighted& f) const {
      return "g(x)h(y)(x^" + std::to_string(f.k) + "+y^" + std::to_string(f.k) + ")";
    }
    std::string operator()(const ProductShift& f) const { return "w(x)*[" + f.base->name() + "]"; }
    std::string operator()(const SumShift& f) const { return "w(x)+[" + f.base->name() + "]"; }
  };
  return std::visit(Visitor{}, form_);
}

}  // namespace expanderlab
