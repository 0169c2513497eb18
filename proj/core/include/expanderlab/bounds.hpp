#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "expanderlab/fn_form.hpp"
#include "expanderlab/fp_core.hpp"
#include "expanderlab/fp_set.hpp"
#include "expanderlab/rational.hpp"
#include "expanderlab/spgraph.hpp"

namespace expanderlab {

/// One evaluation of a bound on concrete sets.
///
/// `lhs` is always an exact integer. `rhs_exact` is present when the right
/// side is rational; `rhs` carries its floating value either way. `holds` is
/// only set for statements with an explicit constant (or exact chain
/// inequalities); the others are tracked through `ratio`.
struct BoundReport {
  std::string suite;
  std::string theorem_id;
  std::uint32_t p = 0;
  std::string family;
  std::size_t size_a = 0, size_b = 0, size_c = 0;
  std::optional<std::uint64_t> m;
  std::uint64_t lhs = 0;
  std::optional<Rational> rhs_exact;
  double rhs = 0;
  double ratio = 0;
  std::optional<bool> holds;
  /// ln(max side)/ln|A| - 1; empty when |A| <= 1.
  std::optional<double> exponent;
  std::uint64_t seed = 0;
};

/// ln(x)/ln(size) - 1, or nullopt when size <= 1 or x == 0.
std::optional<double> empirical_exponent(std::uint64_t max_side, std::size_t size);

/// |f(A,B)| |B.C| >= (1/8) min(|A||B|^2|C| / (p m^2), p|B|/m) for
/// f(x,y) = g(x)(h(x) + y), m = mu(g h). A must lie in the common domain of
/// g and h; B, C in F_p^*.
BoundReport t1_check(const FpSet& a, const FpSet& b, const FpSet& c, const FuncTable& g,
                     const FuncTable& h);

/// |f(A,B)| |B+C| >> min(p|B|/m, |A||B|^2|C|/(p m^2)), m = mu(g). Ratio only.
BoundReport t2_check(const FpSet& a, const FpSet& b, const FpSet& c, const FuncTable& g,
                     const FuncTable& h);

/// Joint report |f(A,A)| min(|A.A|, |A+A|) vs min(|A|^4/p, p|A|) for
/// f(x,y) = g(x)(x + y).
BoundReport sum_product_corollary(const FpSet& a, const FuncTable& g);

/// Admissibility statistics for f(x,y) = g(x) h(y) (x^k + y^k) on G.
struct WeightedStats {
  /// max_z |{ z g(xz) h(yz) / (g(x) h(y)) : x, y in G }|; empty if over cap.
  std::optional<std::uint64_t> m;
  /// max_r mu(x -> x g(x) h(r x)).
  std::uint64_t m_second = 0;
  bool admissible = false;
};
WeightedStats weighted_stats(const FuncTable& g, const FuncTable& h, std::uint64_t cap = 64);

/// |f(A,B)| |A.C| |B.C| >> min(|A|^2|B|^2|C|/p, p|A||B|) for
/// f = g(x) h(y)(x^k + y^k). A, B, C must lie in the common domain G of g, h.
BoundReport t3_check(const FpSet& a, const FpSet& b, const FpSet& c, const FuncTable& g,
                     const FuncTable& h, std::uint32_t k, std::uint64_t cap = 64);

/// |f(A,B)| |B.C| >> min(|A||B|^2|C|/p, p|B|) for f = x^u y^v (x + y).
BoundReport nnn1_check(const FpSet& a, const FpSet& b, const FpSet& c, std::uint32_t u,
                       std::uint32_t v);

/// One report per corollary on a single set A:
///   cor_theta        |A.A| ~ |A|^{1+theta}, f = x(x+y): |f(A,A)| vs
///                    min(|A|^{3-theta}/(p m^2), p |A|^{-theta}/m)
///   cor_xxy          f = x(x+y): max(|f(A,A)|,|A.A|) vs min(|A|^2/sqrt p, sqrt(p|A|))
///   cor_xx2y2        f = x(x^2+y^2), plus the square-root-map route
///   cor_sum_product  f = x(x+y): |f(A,A)| min(|A.A|,|A+A|) vs min(|A|^4/p, p|A|)
std::vector<BoundReport> corollary_checks(const FpSet& a);

/// The x(x^2+y^2) corollary in detail.
struct SquareRootRoute {
  std::size_t direct_image = 0;   // |f(A,A)|, f = x(x^2+y^2)
  std::size_t table_image = 0;    // |g(X)(X+Y)| over X,Y in A^{(2)}
  std::size_t product_set = 0;    // |A.A|
  std::uint64_t m = 0;            // mu(g . id) on the squares, at most 3
};
SquareRootRoute square_root_route(const FpSet& a);

/// Vertex sets from the proofs of the product and sum theorems.
struct ProofSets {
  VertexSet s;
  VertexSet t;
  std::uint64_t e_st = 0;
  std::uint64_t m = 0;
  std::uint64_t retained_triples = 0;  // (x,y,z) with all coordinates in F_p^*
  std::uint64_t excluded_triples = 0;
  std::uint64_t size_bound_s = 0;
  std::uint64_t size_bound_t = 0;
  bool s_bound_ok = false;
  bool t_bound_ok = false;
  bool edge_bound_ok = false;  // e(S,T) m >= retained triples
  bool all_ok() const { return s_bound_ok && t_bound_ok && edge_bound_ok; }
};

/// S = {(z g(z h(x))/g(x), z h(x))}, T = {(g(x)(h(x)+y), yz)} in the graph
/// a c = g(b)(b + d). g is extended by 1 outside its domain.
/// |S| <= |A||C|, |T| <= min(|f(A,B)||B.C|, |A||B||C|), e(S,T) >= triples/m.
ProofSets proof_sets_t1(const FpSet& a, const FpSet& b, const FpSet& c, const FuncTable& g,
                        const FuncTable& h);

/// S = {(g(x)(h(x)+y), y+z)}, T = {(1/g(x), h(x)-z)} in the graph a c = b + d.
/// |S| <= |f(A,B)||B+C|, |T| <= |A||C|, e(S,T) >= triples/mu(g).
ProofSets proof_sets_t2(const FpSet& a, const FpSet& b, const FpSet& c, const FuncTable& g,
                        const FuncTable& h);

/// Number of (x,y,z) in G x F_p^* x F_p^* solving
///   g(x)(h(x)+y) = u, yz = v, z g(z h(x))/g(x) = w, z h(x) = t.
std::uint64_t count_eqca(const FuncTable& g, const FuncTable& h, Residue u, Residue v,
                         Residue w, Residue t);

/// Sizes of f(A,A) and its shifted companion.
enum class ShiftKind { product, sum };
BoundReport shifted_eval(const FpSet& a, const FnForm& f, const FuncTable& w, ShiftKind kind);

/// min(2 - 1/alpha, 1/alpha - 1)/40.
Rational shifted_delta_reference(const Rational& alpha);

/// Quantities from the growth argument for f(x,y) = xy(x+y).
struct GrowthReport {
  std::uint32_t p = 0;
  std::size_t size_a = 0;
  std::size_t f_image = 0;        // |f(A,A)|
  std::size_t product_set = 0;    // |A.A|
  std::size_t triple_product = 0; // |A.A.A|
  Rational k;                     // max(|f(A,A)|, |A.A|)/|A|
  std::size_t squares = 0;        // |A^{(2)}|
  std::size_t cubes = 0;          // |A^{(3)}|
  std::size_t base = 0;           // |A^{(2)}.A|
  std::size_t gamma_size = 0;     // |Gamma|
  std::size_t restricted_sumset = 0;
  bool cube_map_injective = false;  // gcd(3, p-1) = 1
  bool containment = false;         // f(A,A) in restricted sumset
  bool size_equality = false;       // |restricted| == |f(A,A)|
  bool gamma_equality = false;      // |Gamma| == |A^{(3)}|^2
  bool plunnecke = false;           // |A.A.A| <= K^3 |A|
  bool plunnecke_doubling = false;  // |A.A.A| <= (|A.A|/|A|)^3 |A|
};
GrowthReport growth_chain(const FpSet& a);

}  // namespace expanderlab
