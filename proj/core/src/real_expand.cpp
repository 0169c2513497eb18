#include "expanderlab/real_expand.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <set>

#include "expanderlab/errors.hpp"
#include "expanderlab/rng.hpp"

namespace expanderlab {

namespace {

constexpr double kSameTol = 1e-9;
constexpr double kTieTol = 1e-6;

double rel_gap(double x, double y) {
  const double scale = std::max(std::abs(x), std::abs(y));
  return scale == 0 ? 0 : std::abs(x - y) / scale;
}

// Distinct values up to kSameTol; gaps below kTieTol are counted as
// indeterminate but still distinct.
std::size_t distinct_floats(std::vector<double> v, std::size_t* indeterminate) {
  if (v.empty()) return 0;
  std::sort(v.begin(), v.end());
  std::size_t count = 1;
  for (std::size_t i = 1; i < v.size(); ++i) {
    const double g = rel_gap(v[i - 1], v[i]);
    if (g <= kSameTol) continue;
    if (g < kTieTol && indeterminate) ++*indeterminate;
    ++count;
  }
  return count;
}

// Same for points; clusters on the first coordinate, then the second.
std::size_t distinct_points(std::vector<std::pair<double, double>> v, std::size_t* indeterminate) {
  if (v.empty()) return 0;
  std::sort(v.begin(), v.end());
  std::size_t count = 0, i = 0;
  while (i < v.size()) {
    std::size_t j = i + 1;
    while (j < v.size() && rel_gap(v[j - 1].first, v[j].first) <= kSameTol) ++j;
    if (j < v.size() && indeterminate && rel_gap(v[j - 1].first, v[j].first) < kTieTol) {
      ++*indeterminate;
    }
    std::vector<double> second;
    for (std::size_t t = i; t < j; ++t) second.push_back(v[t].second);
    count += distinct_floats(std::move(second), indeterminate);
    i = j;
  }
  return count;
}

template <class T>
std::size_t distinct_exact(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  return static_cast<std::size_t>(std::unique(v.begin(), v.end()) - v.begin());
}

Rational q(std::uint64_t x) { return Rational(mpz_class(static_cast<unsigned long>(x))); }

}  // namespace

// --- sets -------------------------------------------------------------------------

RealSet::RealSet(std::vector<Rational> elements) : elems_(std::move(elements)) {
  for (auto& x : elems_) {
    x.canonicalize();
    if (sgn(x) <= 0) throw DomainError("real sets hold positive numbers only, got " + x.get_str());
  }
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

RealSet RealSet::of(std::initializer_list<long> values) {
  std::vector<Rational> v;
  for (long x : values) v.emplace_back(x);
  return RealSet(std::move(v));
}

RealSet RealSet::interval(long start, std::size_t len) {
  std::vector<Rational> v;
  for (std::size_t i = 0; i < len; ++i) v.emplace_back(start + static_cast<long>(i));
  return RealSet(std::move(v));
}

RealSet RealSet::geometric(const Rational& start, const Rational& ratio, std::size_t len) {
  if (sgn(ratio) <= 0 || ratio == 1) throw DomainError("geometric ratio must be positive and not 1");
  std::vector<Rational> v;
  Rational x = start;
  for (std::size_t i = 0; i < len; ++i) {
    v.push_back(x);
    x *= ratio;
  }
  return RealSet(std::move(v));
}

RealSet RealSet::random(std::size_t size, std::uint64_t seed, long max_num, long max_den) {
  if (max_num < 1 || max_den < 1) throw DomainError("numerator and denominator caps must be positive");
  std::set<Rational> distinct;
  for (long n = 1; n <= max_num && distinct.size() < size; ++n) {
    for (long d = 1; d <= max_den; ++d) distinct.insert(make_rational(n, d));
  }
  if (distinct.size() < size) throw DomainError("not enough distinct rationals for the requested size");
  distinct.clear();
  Rng rng(seed);
  while (distinct.size() < size) {
    const auto n = static_cast<long>(rng.between(1, static_cast<std::uint64_t>(max_num)));
    const auto d = static_cast<long>(rng.between(1, static_cast<std::uint64_t>(max_den)));
    distinct.insert(make_rational(n, d));
  }
  return RealSet(std::vector<Rational>(distinct.begin(), distinct.end()));
}

// --- the function xy(x^k + y^k) ----------------------------------------------------

ExpandingFunction::ExpandingFunction(Rational k) : k_(std::move(k)) {
  k_.canonicalize();
  if (sgn(k_) == 0) throw DomainError("k must be nonzero");
  exact_ = is_integer(k_);
  if (exact_) k_int_ = k_.get_num().get_si();
  k_d_ = k_.get_d();
}

Rational ExpandingFunction::eval_exact(const Rational& s, const Rational& t) const {
  if (!exact_) throw DomainError("exact evaluation needs an integer k");
  return Rational(s * t * (rational_pow(s, k_int_) + rational_pow(t, k_int_)));
}

double ExpandingFunction::eval(double s, double t) const {
  return s * t * (std::pow(s, k_d_) + std::pow(t, k_d_));
}

double ExpandingFunction::eval(const Rational& s, const Rational& t) const {
  if (exact_) return eval_exact(s, t).get_d();
  return eval(s.get_d(), t.get_d());
}

StarPoint star(const Rational& x, const Rational& y, const Rational& xp, const Rational& yp,
               const Rational& k) {
  for (const auto* v : {&x, &y, &xp, &yp}) {
    if (sgn(*v) <= 0) throw DomainError("star product needs positive coordinates");
  }
  const ExpandingFunction f(k);
  StarPoint out;
  out.exact = f.exact();
  if (out.exact) {
    out.first = f.eval_exact(x, xp);
    out.second = f.eval_exact(y, yp);
    out.first_approx = out.first.get_d();
    out.second_approx = out.second.get_d();
  } else {
    out.first_approx = f.eval(x, xp);
    out.second_approx = f.eval(y, yp);
  }
  return out;
}

// --- energy and ratio classes ----------------------------------------------------

std::size_t product_set_size(const RealSet& a) {
  std::vector<Rational> v;
  for (const auto& x : a.elements()) {
    for (const auto& y : a.elements()) v.emplace_back(x * y);
  }
  return distinct_exact(std::move(v));
}

std::size_t sumset_size(const RealSet& a) {
  std::vector<Rational> v;
  for (const auto& x : a.elements()) {
    for (const auto& y : a.elements()) v.emplace_back(x + y);
  }
  return distinct_exact(std::move(v));
}

std::vector<RatioClass> ratio_classes(const RealSet& a) {
  std::map<Rational, std::vector<std::pair<std::size_t, std::size_t>>> classes;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) classes[Rational(a[j] / a[i])].emplace_back(i, j);
  }
  std::vector<RatioClass> out;
  for (auto& [alpha, pairs] : classes) out.push_back(RatioClass{alpha, std::move(pairs)});
  return out;
}

EnergyReport mult_energy_real(const RealSet& a) {
  if (a.empty()) throw DomainError("energy of an empty set");
  EnergyReport r;
  for (const auto& c : ratio_classes(a)) r.energy += c.pairs.size() * c.pairs.size();
  r.product_set = product_set_size(a);
  const std::uint64_t n = a.size();
  r.cauchy_schwarz = q(r.energy) * q(r.product_set) >= q(n) * q(n) * q(n) * q(n);
  return r;
}

DyadicReport dyadic_levels(const RealSet& a) {
  if (a.size() < 2) throw DomainError("dyadic levels need |A| >= 2");
  DyadicReport r;
  std::map<std::uint32_t, DyadicLevel> levels;
  for (const auto& c : ratio_classes(a)) {
    const std::uint64_t s = c.pairs.size();
    const auto i = static_cast<std::uint32_t>(std::bit_width(s) - 1);
    auto& lv = levels[i];
    lv.i = i;
    ++lv.d;
    lv.mass += s * s;
    r.energy += s * s;
  }
  r.threshold = static_cast<double>(r.energy) / std::log(static_cast<double>(a.size()));
  std::uint64_t best = 0;
  for (auto& [i, lv] : levels) {
    const double value = std::ldexp(static_cast<double>(lv.d), 2 * static_cast<int>(i + 1));
    if (value >= r.threshold) r.exists_level = true;
    if (lv.mass > best) {
      best = lv.mass;
      r.selected = i;
      r.d = lv.d;
      r.selected_bound = value >= r.threshold;
    }
    r.levels.push_back(lv);
  }
  return r;
}

// --- chain -------------------------------------------------------------------------

std::size_t image_size(const RealSet& a, const RealSet& b, const ExpandingFunction& f,
                       std::size_t* indeterminate) {
  if (f.exact()) {
    std::vector<Rational> v;
    for (const auto& x : a.elements()) {
      for (const auto& y : b.elements()) v.push_back(f.eval_exact(x, y));
    }
    return distinct_exact(std::move(v));
  }
  std::vector<double> v;
  for (const auto& x : a.elements()) {
    for (const auto& y : b.elements()) v.push_back(f.eval(x, y));
  }
  return distinct_floats(std::move(v), indeterminate);
}

ChainReport solymosi_chain(const RealSet& a, const Rational& k) {
  if (a.size() < 2) throw DomainError("the chain needs |A| >= 2");
  const ExpandingFunction f(k);
  const auto dy = dyadic_levels(a);
  ChainReport r;
  r.level = dy.selected;
  r.d = dy.d;
  r.mirrored = sgn(k) < 0;

  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> classes;
  for (auto& c : ratio_classes(a)) {
    const auto i = static_cast<std::uint32_t>(std::bit_width(c.pairs.size()) - 1);
    if (i != r.level) continue;
    r.slopes.push_back(c.alpha);
    classes.push_back(std::move(c.pairs));
  }
  // The closing class {a0} x A.
  std::vector<std::pair<std::size_t, std::size_t>> last;
  for (std::size_t j = 0; j < a.size(); ++j) last.emplace_back(0, j);
  classes.push_back(std::move(last));

  // Windows between alpha^{1+k} alpha' and alpha alpha'^{1+k}, as sorted endpoints.
  const double kd = k.get_d();
  std::vector<std::pair<double, double>> windows;
  for (std::size_t j = 0; j + 1 < r.slopes.size(); ++j) {
    const double x = r.slopes[j].get_d(), y = r.slopes[j + 1].get_d();
    const double e1 = std::pow(x, 1 + kd) * y, e2 = x * std::pow(y, 1 + kd);
    windows.emplace_back(std::min(e1, e2), std::max(e1, e2));
  }
  r.intervals_disjoint = true;
  for (std::size_t j = 0; j + 1 < windows.size(); ++j) {
    const double gap = windows[j + 1].first - windows[j].second;
    if (gap < 0 && rel_gap(windows[j + 1].first, windows[j].second) > kSameTol) r.intervals_disjoint = false;
  }

  r.slopes_within = true;
  r.pairs_injective = true;
  std::vector<std::pair<double, double>> all_float;
  std::vector<std::pair<Rational, Rational>> all_exact;
  for (std::size_t j = 0; j + 1 < classes.size(); ++j) {
    const auto& c1 = classes[j];
    const auto& c2 = classes[j + 1];
    r.chain_sum += static_cast<std::uint64_t>(c1.size()) * c2.size();
    std::vector<std::pair<double, double>> pts_float;
    std::vector<std::pair<Rational, Rational>> pts_exact;
    for (auto [i1, j1] : c1) {
      for (auto [i2, j2] : c2) {
        const StarPoint s = star(a[i1], a[j1], a[i2], a[j2], k);
        if (s.exact) {
          pts_exact.emplace_back(s.first, s.second);
        } else {
          pts_float.emplace_back(s.first_approx, s.second_approx);
        }
        if (j < windows.size()) {
          const double slope = s.second_approx / s.first_approx;
          const bool inside = slope > windows[j].first && slope < windows[j].second;
          if (!inside) {
            const bool near = rel_gap(slope, windows[j].first) < kTieTol ||
                              rel_gap(slope, windows[j].second) < kTieTol;
            if (near) {
              ++r.indeterminate;
            } else {
              r.slopes_within = false;
            }
          }
        }
      }
    }
    const std::size_t expected = c1.size() * c2.size();
    const std::size_t got = f.exact() ? distinct_exact(pts_exact) : distinct_points(pts_float, &r.indeterminate);
    if (got != expected) r.pairs_injective = false;
    all_float.insert(all_float.end(), pts_float.begin(), pts_float.end());
    all_exact.insert(all_exact.end(), pts_exact.begin(), pts_exact.end());
  }
  r.union_size = f.exact() ? distinct_exact(std::move(all_exact)) : distinct_points(std::move(all_float), &r.indeterminate);
  r.f_image = image_size(a, a, f, &r.indeterminate);
  r.level_bound = r.d << (2 * r.level);
  r.conclusion = static_cast<std::uint64_t>(r.f_image) * r.f_image >= r.level_bound;
  return r;
}

BoundReport pp71_check(const RealSet& a, const Rational& k) {
  if (a.size() < 3) throw DomainError("pp71 needs |A| >= 3");
  const ExpandingFunction f(k);
  BoundReport r;
  r.suite = "real";
  r.theorem_id = "pp71";
  r.size_a = r.size_b = r.size_c = a.size();
  const std::size_t fa = image_size(a, a, f);
  const std::size_t aa = product_set_size(a);
  const double n = static_cast<double>(a.size());
  const double ln = std::log(n);
  r.lhs = std::max(fa, aa);
  r.rhs = std::cbrt(n * n * n * n / ln);
  r.ratio = static_cast<double>(r.lhs) / r.rhs;
  const double fa_d = static_cast<double>(fa);
  r.holds = fa_d * fa_d * 4.0 * static_cast<double>(aa) * ln >= n * n * n * n;
  r.exponent = empirical_exponent(r.lhs, a.size());
  return r;
}

// --- curves --------------------------------------------------------------------------

CurveParams::CurveParams(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {
  a.canonicalize();
  b.canonicalize();
  if (sgn(a) == 0 || sgn(b) == 0) throw DomainError("curve parameters must be nonzero");
}

bool CurveParams::contains(const Rational& y, const Rational& yp) const {
  return a * y * y + a * a * y == b * yp * yp + b * b * yp;
}

QPoly intersection_cubic(const CurveParams& c1, const CurveParams& c2) {
  const Rational &a = c1.a, &b = c1.b, &c = c2.a, &d = c2.b;
  return QPoly({Rational(a * c * (a - c)), Rational(a * d * d - b * b * c), Rational(b * c * c - a * a * d),
                Rational(b * d * (b - d))});
}

std::vector<CurvePoint> curve_intersect(const CurveParams& c1, const CurveParams& c2) {
  if (c1 == c2) throw DomainError("identical curves meet in infinitely many points");
  if (c1.degenerate() || c2.degenerate()) throw DomainError("degenerate curve (a = b)");
  const Rational &a = c1.a, &b = c1.b, &c = c2.a, &d = c2.b;
  const QPoly cubic = intersection_cubic(c1, c2);
  const QPoly s = squarefree_part(cubic);

  // y = N/D from the first curve; P_i is curve i's equation times D^2.
  const QPoly z({Rational(0), Rational(1)});
  const QPoly num({Rational(-a * a), Rational(b * b)});
  const QPoly den({a, Rational(0), Rational(-b)});
  auto curve_poly = [&](const Rational& u, const Rational& v) {
    return u * (num * num) + Rational(u * u) * (num * den) - v * (z * z * num * num) -
           Rational(v * v) * (z * num * den);
  };
  const QPoly p1 = curve_poly(a, b), p2 = curve_poly(c, d);

  std::vector<CurvePoint> out;
  for (const auto& root : isolate_real_roots(s, Rational(1, 1000000000) / 1000000000)) {
    CurvePoint pt;
    pt.z_root = root;
    pt.z_poly = s;
    if (root.exact) {
      const Rational zr = root.lo;
      const Rational dr = den(zr), nr = num(zr);
      if (sgn(zr) == 0 || sgn(dr) == 0 || sgn(nr) == 0) continue;
      const Rational y = nr / dr;
      const Rational yp = zr * y;
      pt.z_exact = zr;
      pt.y_exact = y;
      pt.yp_exact = yp;
      pt.verified = c1.contains(y, yp) && c2.contains(y, yp);
      pt.z = zr.get_d();
      pt.y = y.get_d();
      pt.yp = yp.get_d();
    } else {
      if (shares_root(s, root, z) || shares_root(s, root, den) || shares_root(s, root, num)) continue;
      pt.verified = shares_root(s, root, p1) && shares_root(s, root, p2);
      const Rational mid = (root.lo + root.hi) / 2;
      const Rational y = num(mid) / den(mid);
      pt.z = mid.get_d();
      pt.y = y.get_d();
      pt.yp = Rational(mid * y).get_d();
    }
    out.push_back(std::move(pt));
  }
  return out;
}

IncidenceReport incidence_count(const std::vector<RealPoint>& points,
                                const std::vector<CurveParams>& curves) {
  IncidenceReport r;
  r.points = points.size();
  r.curves = curves.size();
  for (const auto& cv : curves) {
    for (const auto& [y, yp] : points) {
      if (!cv.contains(y, yp)) continue;
      ++r.incidences;
      if (cv.degenerate()) {
        ++r.diagonal_curves;
      } else if (y == yp) {
        ++r.diagonal_points;
      } else {
        ++r.off_diagonal;
      }
    }
  }
  return r;
}

Pp73Report pp73_check(const RealSet& a, const RealSet& b) {
  if (a.empty() || b.empty()) throw DomainError("pp73 needs nonempty sets");
  Pp73Report out;
  const ExpandingFunction f(Rational(1));
  out.f_image = image_size(a, b, f);

  std::vector<RealPoint> points;
  for (const auto& y : b.elements()) {
    for (const auto& yp : b.elements()) points.emplace_back(y, yp);
  }
  std::vector<CurveParams> curves;
  for (const auto& x : a.elements()) {
    for (const auto& xp : a.elements()) curves.emplace_back(x, xp);
  }
  out.incidences = incidence_count(points, curves);

  const std::uint64_t na = a.size(), nb = b.size();
  out.balanced = na <= nb * nb && nb <= na * na;
  out.cauchy_schwarz = q(out.f_image) * q(out.incidences.incidences) >= q(na) * q(na) * q(nb) * q(nb);
  out.diagonal_bounds = out.incidences.diagonal_curves <= 6 * na * nb &&
                        out.incidences.diagonal_points <= 6 * na * nb;

  BoundReport& r = out.report;
  r.suite = "real";
  r.theorem_id = "pp73";
  r.size_a = na;
  r.size_b = nb;
  r.lhs = out.f_image;
  bool easy_ok = true;
  if (out.balanced) {
    r.rhs = std::cbrt(static_cast<double>(na * nb) * static_cast<double>(na * nb));
  } else {
    r.rhs = static_cast<double>(std::max(na, nb));
    r.rhs_exact = q(std::max(na, nb));
    easy_ok = out.f_image >= std::max(na, nb);
  }
  r.ratio = static_cast<double>(r.lhs) / r.rhs;
  r.holds = out.cauchy_schwarz && out.diagonal_bounds && easy_ok;
  r.exponent = empirical_exponent(r.lhs, na);
  return out;
}

}  // namespace expanderlab
