#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "expanderlab/bounds.hpp"
#include "expanderlab/qpoly.hpp"
#include "expanderlab/rational.hpp"

namespace expanderlab {

/// A finite set of positive rationals, kept sorted and duplicate-free.
class RealSet {
 public:
  RealSet() = default;
  /// Sorts and deduplicates; DomainError on a nonpositive element.
  explicit RealSet(std::vector<Rational> elements);
  static RealSet of(std::initializer_list<long> values);
  /// {start, start+1, ..., start+len-1}
  static RealSet interval(long start, std::size_t len);
  /// {start * ratio^i : 0 <= i < len}
  static RealSet geometric(const Rational& start, const Rational& ratio, std::size_t len);
  /// `size` distinct rationals n/d with 1 <= n <= max_num, 1 <= d <= max_den.
  static RealSet random(std::size_t size, std::uint64_t seed, long max_num = 64, long max_den = 8);

  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  const std::vector<Rational>& elements() const { return elems_; }
  const Rational& operator[](std::size_t i) const { return elems_[i]; }
  const Rational& min() const { return elems_.front(); }

 private:
  std::vector<Rational> elems_;
};

/// f(s,t) = s t (s^k + t^k) evaluated exactly when k is an integer and in
/// double precision otherwise.
class ExpandingFunction {
 public:
  /// DomainError for k = 0.
  explicit ExpandingFunction(Rational k);
  const Rational& k() const { return k_; }
  bool exact() const { return exact_; }
  Rational eval_exact(const Rational& s, const Rational& t) const;
  double eval(const Rational& s, const Rational& t) const;
  double eval(double s, double t) const;

 private:
  Rational k_;
  bool exact_;
  long k_int_ = 0;
  double k_d_ = 0;
};

/// (x,y) * (x',y') = (f(x,x'), f(y,y')).
struct StarPoint {
  bool exact = false;
  Rational first, second;  // valid when exact
  double first_approx = 0, second_approx = 0;
};
/// DomainError for nonpositive inputs or k = 0.
StarPoint star(const Rational& x, const Rational& y, const Rational& xp, const Rational& yp,
               const Rational& k);

struct EnergyReport {
  std::uint64_t energy = 0;       // |{ab = cd}|
  std::size_t product_set = 0;    // |A.A|
  bool cauchy_schwarz = false;    // E |A.A| >= |A|^4
};
EnergyReport mult_energy_real(const RealSet& a);

/// Ratio classes A_alpha = {(x,y) in A^2 : y = alpha x}, by increasing alpha.
struct RatioClass {
  Rational alpha;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // indices into A
};
std::vector<RatioClass> ratio_classes(const RealSet& a);

struct DyadicLevel {
  std::uint32_t i = 0;
  std::size_t d = 0;           // |E_i|
  std::uint64_t mass = 0;      // sum over E_i of |A_alpha|^2
};
struct DyadicReport {
  std::uint64_t energy = 0;
  double threshold = 0;        // E(A)/ln|A|
  std::vector<DyadicLevel> levels;  // nonempty levels, increasing i
  std::uint32_t selected = 0;  // level with the largest mass
  std::size_t d = 0;
  bool selected_bound = false; // 4^{i+1} d >= E/ln|A| at the selected level
  bool exists_level = false;   // some level satisfies it
};
/// DomainError when |A| < 2.
DyadicReport dyadic_levels(const RealSet& a);

/// Result of walking the selected dyadic level's slope classes.
struct ChainReport {
  std::uint32_t level = 0;
  std::size_t d = 0;
  bool mirrored = false;            // classes taken as A_{1/alpha}
  std::vector<Rational> slopes;     // alpha_1 < ... < alpha_d
  /// Each consecutive pair's slope window is disjoint from the next.
  bool intervals_disjoint = false;
  /// Every star product lies strictly inside its pair's window.
  bool slopes_within = false;
  /// Star products within each consecutive pair are pairwise distinct.
  bool pairs_injective = false;
  /// Float comparisons too close to call.
  std::size_t indeterminate = 0;
  std::uint64_t chain_sum = 0;      // sum_{j<=d} |A_j||A_{j+1}|, A_{d+1} = {a0} x A
  std::uint64_t union_size = 0;     // distinct star products over the chain
  std::size_t f_image = 0;          // |f(A,A)|
  std::uint64_t level_bound = 0;    // 4^i d
  bool conclusion = false;          // |f(A,A)|^2 >= 4^i d
};
/// DomainError for k = 0 or |A| < 2.
ChainReport solymosi_chain(const RealSet& a, const Rational& k);

/// |f(A,A)| for f = xy(x^k + y^k). Near-ties (relative gap below 1e-6 but
/// above 1e-9) in the float path are counted in `indeterminate`.
std::size_t image_size(const RealSet& a, const RealSet& b, const ExpandingFunction& f,
                       std::size_t* indeterminate = nullptr);
std::size_t product_set_size(const RealSet& a);
std::size_t sumset_size(const RealSet& a);

/// max(|f(A,A)|, |A.A|) vs (|A|^4/ln|A|)^{1/3}; `holds` records the chain
/// |f(A,A)|^2 * 4|A.A| ln|A| >= |A|^4. DomainError when |A| < 3.
BoundReport pp71_check(const RealSet& a, const Rational& k);

/// gamma_{a,b} = {(y,y') : a y^2 + a^2 y = b y'^2 + b^2 y'}.
struct CurveParams {
  Rational a, b;
  /// DomainError for a zero parameter.
  CurveParams(Rational a_, Rational b_);
  /// Over the reals a^3 = b^3 iff a = b.
  bool degenerate() const { return a == b; }
  bool contains(const Rational& y, const Rational& yp) const;
  friend bool operator==(const CurveParams& l, const CurveParams& r) { return l.a == r.a && l.b == r.b; }
};

/// bd(b-d) z^3 + (b c^2 - a^2 d) z^2 + (a d^2 - b^2 c) z + ac(a-c), obtained
/// from (a - b z^2)(d^2 z - c^2) - (c - d z^2)(b^2 z - a^2) with z = y'/y.
QPoly intersection_cubic(const CurveParams& c1, const CurveParams& c2);

struct CurvePoint {
  RootInterval z_root;         // root of `z_poly`
  QPoly z_poly;                // squarefree part of the cubic
  double z = 0, y = 0, yp = 0;
  std::optional<Rational> z_exact, y_exact, yp_exact;
  bool verified = false;       // both curve equations hold exactly
};

/// Points of gamma_1 cap gamma_2 in (R^*)^2, at most three. DomainError for
/// identical or degenerate curves.
std::vector<CurvePoint> curve_intersect(const CurveParams& c1, const CurveParams& c2);

using RealPoint = std::pair<Rational, Rational>;

struct IncidenceReport {
  std::size_t points = 0;
  std::size_t curves = 0;
  std::uint64_t incidences = 0;
  std::uint64_t diagonal_curves = 0;   // curves with a = b
  std::uint64_t diagonal_points = 0;   // a != b, points with y = y'
  std::uint64_t off_diagonal = 0;      // a != b, y != y'
};
IncidenceReport incidence_count(const std::vector<RealPoint>& points,
                                const std::vector<CurveParams>& curves);

struct Pp73Report {
  BoundReport report;
  IncidenceReport incidences;
  std::size_t f_image = 0;
  bool balanced = false;
  /// |f(A,B)| * sum |gamma cap B^2| >= |A|^2 |B|^2.
  bool cauchy_schwarz = false;
  /// diagonal terms each at most 6|A||B|.
  bool diagonal_bounds = false;
};
/// f = xy(x+y). DomainError on empty inputs.
Pp73Report pp73_check(const RealSet& a, const RealSet& b);

}  // namespace expanderlab
