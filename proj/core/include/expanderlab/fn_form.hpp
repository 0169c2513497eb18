#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "expanderlab/fp_core.hpp"

namespace expanderlab {

/// The two-variable function families studied over F_p.
///
///   general      f(x,y) = g(x) g'(y) (h(x) + y)      (g' optional, = 1)
///   power        f(x,y) = x^u y^v (x^k + y^k)
///   weighted     f(x,y) = g(x) h(y) (x^k + y^k)
///   product      P_w(f)(x,y) = w(x) f(x,y)
///   sum          S_w(f)(x,y) = w(x) + f(x,y)
class FnForm {
 public:
  struct General {
    FuncTable g;
    std::optional<FuncTable> g_prime;
    FuncTable h;
  };
  struct Power {
    std::uint32_t u = 1, v = 1, k = 1;
  };
  struct Weighted {
    FuncTable g;
    FuncTable h;
    std::uint32_t k = 1;
  };
  struct ProductShift {
    std::shared_ptr<const FnForm> base;
    FuncTable w;
  };
  struct SumShift {
    std::shared_ptr<const FnForm> base;
    FuncTable w;
  };
  using Variant = std::variant<General, Power, Weighted, ProductShift, SumShift>;

  static FnForm general(FuncTable g, FuncTable h, std::optional<FuncTable> g_prime = std::nullopt);
  static FnForm power(PrimeModulus p, std::uint32_t u, std::uint32_t v, std::uint32_t k);
  static FnForm weighted(FuncTable g, FuncTable h, std::uint32_t k);
  static FnForm product_shift(FnForm base, FuncTable w);
  static FnForm sum_shift(FnForm base, FuncTable w);

  /// x(x + y) on F_p^*.
  static FnForm x_times_x_plus_y(PrimeModulus p);
  /// xy(x + y).
  static FnForm xy_times_x_plus_y(PrimeModulus p);

  PrimeModulus modulus() const { return modulus_; }
  const Variant& variant() const { return form_; }

  /// Evaluates f(x, y). Throws DomainError when x or y falls outside a
  /// table's domain.
  Residue operator()(Residue x, Residue y) const;

  std::string name() const;

 private:
  FnForm(PrimeModulus p, Variant v) : modulus_(p), form_(std::move(v)) {}

  PrimeModulus modulus_;
  Variant form_;
};

}  // namespace expanderlab
