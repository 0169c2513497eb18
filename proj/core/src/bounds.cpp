#include "expanderlab/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "expanderlab/errors.hpp"
#include "expanderlab/fp_sets.hpp"

namespace expanderlab {

namespace {

Rational q(std::uint64_t x) { return Rational(mpz_class(static_cast<unsigned long>(x))); }

double ratio_of(std::uint64_t lhs, const Rational& rhs) {
  if (sgn(rhs) == 0) return std::numeric_limits<double>::infinity();
  const Rational r = q(lhs) / rhs;
  return r.get_d();
}

const Rational& rmin(const Rational& a, const Rational& b) { return cmp(a, b) <= 0 ? a : b; }

void require_subset(const FpSet& s, const FpSet& domain, const char* what) {
  if (!s.is_subset_of(domain)) throw DomainError(std::string(what) + " is not inside the function domain");
}

void require_units(const FpSet& s, const char* what) {
  if (s.contains(0)) throw DomainError(std::string(what) + " must lie in F_p^*");
}

void require_modulus(const FpSet& a, const FpSet& b, const FpSet& c, const FuncTable& g) {
  const auto p = g.modulus();
  if (!(a.modulus() == p && b.modulus() == p && c.modulus() == p)) {
    throw DomainError("modulus mismatch");
  }
}

FuncTable restrict_to(const FuncTable& t, const FpSet& domain) {
  return FuncTable::from_function(domain, [&](Residue x) { return t(x); });
}

// mu(g h) over the common domain of g and h.
std::uint64_t product_multiplicity(const FuncTable& g, const FuncTable& h) {
  const FpSet common = g.domain().set_intersection(h.domain());
  return multiplicity(pointwise_product(restrict_to(g, common), restrict_to(h, common)));
}

BoundReport base_report(const char* suite, const char* id, const FpSet& a, const FpSet& b,
                        const FpSet& c) {
  BoundReport r;
  r.suite = suite;
  r.theorem_id = id;
  r.p = a.modulus().value();
  r.size_a = a.size();
  r.size_b = b.size();
  r.size_c = c.size();
  return r;
}

void finish(BoundReport& r, Rational rhs, std::uint64_t max_side, bool hard) {
  r.rhs = rhs.get_d();
  r.ratio = ratio_of(r.lhs, rhs);
  if (hard) r.holds = cmp(q(r.lhs), rhs) >= 0;
  r.rhs_exact = std::move(rhs);
  r.exponent = empirical_exponent(max_side, r.size_a);
}

}  // namespace

std::optional<double> empirical_exponent(std::uint64_t max_side, std::size_t size) {
  if (size <= 1 || max_side == 0) return std::nullopt;
  return std::log(static_cast<double>(max_side)) / std::log(static_cast<double>(size)) - 1.0;
}

BoundReport t1_check(const FpSet& a, const FpSet& b, const FpSet& c, const FuncTable& g,
                     const FuncTable& h) {
  require_modulus(a, b, c, g);
  require_subset(a, g.domain(), "A");
  require_subset(a, h.domain(), "A");
  require_units(b, "B");
  require_units(c, "C");
  const auto p = g.modulus();
  const std::uint64_t m = product_multiplicity(g, h);
  const auto fab = image(FnForm::general(g, h), a, b).size();
  const auto bc = productset(b, c).size();

  BoundReport r = base_report("bounds", "t1", a, b, c);
  r.m = m;
  r.lhs = fab * bc;
  const Rational first = q(a.size()) * q(b.size()) * q(b.size()) * q(c.size()) / (q(p.value()) * q(m) * q(m));
  const Rational second = q(p.value()) * q(b.size()) / q(m);
  finish(r, Rational(rmin(first, second) / 8), std::max<std::uint64_t>(fab, bc), true);
  return r;
}

BoundReport t2_check(const FpSet& a, const FpSet& b, const FpSet& c, const FuncTable& g,
                     const FuncTable& h) {
  require_modulus(a, b, c, g);
  require_subset(a, g.domain(), "A");
  require_subset(a, h.domain(), "A");
  require_units(b, "B");
  require_units(c, "C");
  const auto p = g.modulus();
  const std::uint64_t m = multiplicity(g);
  const auto fab = image(FnForm::general(g, h), a, b).size();
  const auto bpc = sumset(b, c).size();

  BoundReport r = base_report("bounds", "t2", a, b, c);
  r.m = m;
  r.lhs = fab * bpc;
  const Rational first = q(p.value()) * q(b.size()) / q(m);
  const Rational second = q(a.size()) * q(b.size()) * q(b.size()) * q(c.size()) / (q(p.value()) * q(m) * q(m));
  finish(r, rmin(first, second), std::max<std::uint64_t>(fab, bpc), false);
  return r;
}

BoundReport sum_product_corollary(const FpSet& a, const FuncTable& g) {
  require_subset(a, g.domain(), "A");
  const auto p = g.modulus();
  const auto f = FnForm::general(g, FuncTable::identity(g.domain()));
  const auto faa = image(f, a, a).size();
  const auto prod = productset(a, a).size();
  const auto sum = sumset(a, a).size();

  BoundReport r = base_report("bounds", "cor_sum_product", a, a, a);
  r.m = multiplicity(g);
  r.lhs = faa * std::min(prod, sum);
  const Rational n = q(a.size());
  const Rational first = n * n * n * n / q(p.value());
  const Rational second = q(p.value()) * n;
  finish(r, rmin(first, second), std::max({faa, prod, sum}), false);
  return r;
}

WeightedStats weighted_stats(const FuncTable& g, const FuncTable& h, std::uint64_t cap) {
  if (!(g.domain() == h.domain())) throw DomainError("g and h need a common domain");
  const auto& dom = g.domain();
  const auto p = g.modulus();
  const auto elems = dom.elements();
  for (Residue x : elems) {
    for (Residue y : elems) {
      if (!dom.contains(p.mul(x, y))) throw DomainError("the common domain is not a subgroup");
    }
  }

  WeightedStats st;
  std::uint64_t best = 0;
  bool over = false;
  for (Residue z : elems) {
    FpSet values(p, true);
    for (Residue x : elems) {
      const Residue num_x = p.mul(z, p.div(g(p.mul(x, z)), g(x)));
      for (Residue y : elems) {
        values.insert_residue(p.mul(num_x, p.div(h(p.mul(y, z)), h(y))));
      }
      if (values.size() > cap) break;
    }
    if (values.size() > cap) {
      over = true;
      break;
    }
    best = std::max<std::uint64_t>(best, values.size());
  }
  if (!over) st.m = best;

  std::vector<std::uint64_t> counts(p.value());
  for (Residue r : elems) {
    std::fill(counts.begin(), counts.end(), 0);
    for (Residue x : elems) {
      const Residue v = p.mul(p.mul(x, g(x)), h(p.mul(r, x)));
      st.m_second = std::max(st.m_second, ++counts[v]);
    }
  }
  st.admissible = st.m.has_value() && st.m_second <= cap;
  return st;
}

BoundReport t3_check(const FpSet& a, const FpSet& b, const FpSet& c, const FuncTable& g,
                     const FuncTable& h, std::uint32_t k, std::uint64_t cap) {
  require_modulus(a, b, c, g);
  for (const auto* s : {&a, &b, &c}) require_subset(*s, g.domain(), "A, B and C");
  const auto p = g.modulus();
  const auto stats = weighted_stats(g, h, cap);
  const auto fab = image(FnForm::weighted(g, h, k), a, b).size();
  const auto ac = productset(a, c).size();
  const auto bc = productset(b, c).size();

  BoundReport r = base_report("bounds", "t3", a, b, c);
  r.m = stats.m;
  r.lhs = fab * ac * bc;
  const Rational na = q(a.size()), nb = q(b.size()), nc = q(c.size());
  const Rational first = na * na * nb * nb * nc / q(p.value());
  const Rational second = q(p.value()) * na * nb;
  finish(r, rmin(first, second), std::max({fab, ac, bc}), false);
  return r;
}

BoundReport nnn1_check(const FpSet& a, const FpSet& b, const FpSet& c, std::uint32_t u,
                       std::uint32_t v) {
  const auto p = a.modulus();
  if (!(b.modulus() == p && c.modulus() == p)) throw DomainError("modulus mismatch");
  for (const auto* s : {&a, &b, &c}) require_units(*s, "A, B and C");
  const auto fab = image(FnForm::power(p, u, v, 1), a, b).size();
  const auto bc = productset(b, c).size();

  BoundReport r = base_report("bounds", "nnn1", a, b, c);
  r.lhs = fab * bc;
  const Rational na = q(a.size()), nb = q(b.size()), nc = q(c.size());
  const Rational first = na * nb * nb * nc / q(p.value());
  const Rational second = q(p.value()) * nb;
  finish(r, rmin(first, second), std::max(fab, bc), false);
  return r;
}

SquareRootRoute square_root_route(const FpSet& a) {
  require_units(a, "A");
  const auto p = a.modulus();
  SquareRootRoute out;
  out.direct_image = image(FnForm::power(p, 1, 0, 2), a, a).size();
  out.product_set = productset(a, a).size();
  const FuncTable g = square_root_table(p);
  const FuncTable id = FuncTable::identity(g.domain());
  const FpSet squares = power_set(a, 2);
  out.table_image = image(FnForm::general(g, id), squares, squares).size();
  out.m = multiplicity(pointwise_product(g, id));
  return out;
}

std::vector<BoundReport> corollary_checks(const FpSet& a) {
  require_units(a, "A");
  const auto p = a.modulus();
  const auto units = FpSet::multiplicative_group(p);
  const auto id = FuncTable::identity(units);
  const auto faa = image(FnForm::x_times_x_plus_y(p), a, a).size();
  const auto prod = productset(a, a).size();
  const Rational n = q(a.size());
  const Rational pq = q(p.value());
  std::vector<BoundReport> out;

  {
    // |A|^theta = |A.A|/|A| exactly, so both terms stay rational.
    BoundReport r = base_report("corollaries", "cor_theta", a, a, a);
    const std::uint64_t m = multiplicity(pointwise_product(id, id));
    r.m = m;
    r.lhs = faa;
    if (prod > 0) {
      const Rational first = n * n * n * n / (q(prod) * pq * q(m) * q(m));
      const Rational second = pq * n / (q(prod) * q(m));
      finish(r, rmin(first, second), faa, false);
    } else {
      finish(r, Rational(0), faa, false);
    }
    out.push_back(std::move(r));
  }

  const double root_bound = std::min(static_cast<double>(a.size() * a.size()) / std::sqrt(p.value()),
                                     std::sqrt(static_cast<double>(p.value()) * a.size()));
  auto float_report = [&](const char* id_name, std::uint64_t lhs, std::uint64_t m) {
    BoundReport r = base_report("corollaries", id_name, a, a, a);
    r.m = m;
    r.lhs = lhs;
    r.rhs = root_bound;
    r.ratio = root_bound > 0 ? static_cast<double>(lhs) / root_bound
                             : std::numeric_limits<double>::infinity();
    r.exponent = empirical_exponent(lhs, a.size());
    return r;
  };
  out.push_back(float_report("cor_xxy", std::max(faa, prod), 2));
  const auto route = square_root_route(a);
  out.push_back(float_report("cor_xx2y2", std::max(route.direct_image, prod), route.m));

  BoundReport sp = sum_product_corollary(a, id);
  sp.suite = "corollaries";
  out.push_back(std::move(sp));
  return out;
}

// --- proof constructions ----------------------------------------------------

ProofSets proof_sets_t1(const FpSet& a, const FpSet& b, const FpSet& c, const FuncTable& g,
                        const FuncTable& h) {
  require_modulus(a, b, c, g);
  require_subset(a, g.domain(), "A");
  require_subset(a, h.domain(), "A");
  require_units(b, "B");
  require_units(c, "C");
  const auto p = g.modulus();
  const FuncTable ge = g.extended(1);
  const auto graph = SumProductGraph::build(EdgeRule::standard(ge));

  ProofSets out{VertexSet(graph.vertex_count()), VertexSet(graph.vertex_count())};
  out.m = product_multiplicity(g, h);
  const auto av = a.elements(), bv = b.elements(), cv = c.elements();
  for (Residue x : av) {
    const Residue gx = g(x), hx = h(x);
    for (Residue z : cv) {
      const Residue zh = p.mul(z, hx);
      out.s.insert(graph.index(p.mul(z, p.div(ge(zh), gx)), zh));
    }
    for (Residue y : bv) {
      const Residue u = p.mul(gx, p.add(hx, y));
      if (u == 0) {
        out.excluded_triples += cv.size();
        continue;
      }
      for (Residue z : cv) out.t.insert(graph.index(u, p.mul(y, z)));
      out.retained_triples += cv.size();
    }
  }
  out.e_st = edge_count(graph, out.s, out.t);
  const auto fab = image(FnForm::general(g, h), a, b).size();
  const auto bc = productset(b, c).size();
  out.size_bound_s = a.size() * c.size();
  out.size_bound_t = std::min<std::uint64_t>(fab * bc, a.size() * b.size() * c.size());
  out.s_bound_ok = out.s.size() <= out.size_bound_s;
  out.t_bound_ok = out.t.size() <= out.size_bound_t;
  out.edge_bound_ok = out.e_st * out.m >= out.retained_triples;
  return out;
}

ProofSets proof_sets_t2(const FpSet& a, const FpSet& b, const FpSet& c, const FuncTable& g,
                        const FuncTable& h) {
  require_modulus(a, b, c, g);
  require_subset(a, g.domain(), "A");
  require_subset(a, h.domain(), "A");
  require_units(b, "B");
  require_units(c, "C");
  const auto p = g.modulus();
  const auto graph = SumProductGraph::build(EdgeRule::sum_product(p));

  ProofSets out{VertexSet(graph.vertex_count()), VertexSet(graph.vertex_count())};
  out.m = multiplicity(g);
  const auto av = a.elements(), bv = b.elements(), cv = c.elements();
  for (Residue x : av) {
    const Residue gx = g(x), hx = h(x);
    for (Residue z : cv) {
      const Residue d = p.sub(hx, z);
      if (d != 0) out.t.insert(graph.index(p.inv(gx), d));
    }
    for (Residue y : bv) {
      const Residue u = p.mul(gx, p.add(hx, y));
      for (Residue z : cv) {
        const Residue sb = p.add(y, z);
        if (u == 0 || sb == 0 || p.sub(hx, z) == 0) {
          ++out.excluded_triples;
          continue;
        }
        out.s.insert(graph.index(u, sb));
        ++out.retained_triples;
      }
    }
  }
  out.e_st = edge_count(graph, out.s, out.t);
  const auto fab = image(FnForm::general(g, h), a, b).size();
  const auto bpc = sumset(b, c).size();
  out.size_bound_s = std::min<std::uint64_t>(fab * bpc, a.size() * b.size() * c.size());
  out.size_bound_t = a.size() * c.size();
  out.s_bound_ok = out.s.size() <= out.size_bound_s;
  out.t_bound_ok = out.t.size() <= out.size_bound_t;
  out.edge_bound_ok = out.e_st * out.m >= out.retained_triples;
  return out;
}

std::uint64_t count_eqca(const FuncTable& g, const FuncTable& h, Residue u, Residue v, Residue w,
                         Residue t) {
  const auto p = g.modulus();
  const FuncTable ge = g.extended(1);
  const FpSet common = g.domain().set_intersection(h.domain());
  std::uint64_t count = 0;
  common.for_each([&](Residue x) {
    const Residue gx = g(x), hx = h(x);
    for (Residue z = 1; z < p.value(); ++z) {
      const Residue zh = p.mul(z, hx);
      if (zh != t % p.value()) continue;
      if (p.mul(z, p.div(ge(zh), gx)) != w % p.value()) continue;
      for (Residue y = 1; y < p.value(); ++y) {
        if (p.mul(gx, p.add(hx, y)) == u % p.value() && p.mul(y, z) == v % p.value()) ++count;
      }
    }
  });
  return count;
}

// --- shifted functions --------------------------------------------------------

BoundReport shifted_eval(const FpSet& a, const FnForm& f, const FuncTable& w, ShiftKind kind) {
  const auto faa = image(f, a, a).size();
  const FnForm shifted = kind == ShiftKind::product ? FnForm::product_shift(f, w) : FnForm::sum_shift(f, w);
  const auto saa = image(shifted, a, a).size();
  BoundReport r = base_report("shifted", kind == ShiftKind::product ? "t5" : "t6", a, a, a);
  r.m = multiplicity(w);
  r.lhs = std::max(faa, saa);
  r.rhs = static_cast<double>(a.size());
  r.rhs_exact = q(a.size());
  r.ratio = ratio_of(r.lhs, *r.rhs_exact);
  r.exponent = empirical_exponent(r.lhs, a.size());
  return r;
}

Rational shifted_delta_reference(const Rational& alpha) {
  if (sgn(alpha) <= 0) throw DomainError("alpha must be positive");
  const Rational inv = 1 / alpha;
  const Rational first = 2 - inv;
  const Rational second = inv - 1;
  return Rational(rmin(first, second) / 40);
}

// --- growth chain ---------------------------------------------------------------

GrowthReport growth_chain(const FpSet& a) {
  require_units(a, "A");
  if (a.empty()) throw DomainError("growth chain needs a nonempty set");
  const auto p = a.modulus();
  GrowthReport r;
  r.p = p.value();
  r.size_a = a.size();
  const FpSet f_image = image(FnForm::xy_times_x_plus_y(p), a, a);
  const FpSet aa = productset(a, a);
  r.f_image = f_image.size();
  r.product_set = aa.size();
  r.triple_product = productset(aa, a).size();
  r.k = Rational(q(std::max(r.f_image, r.product_set)) / q(r.size_a));

  const FpSet squares = power_set(a, 2);
  const FpSet cubes = power_set(a, 3);
  const FpSet base = productset(squares, a);
  r.squares = squares.size();
  r.cubes = cubes.size();
  r.base = base.size();

  FpSet restricted(p);
  const auto bv = base.elements();
  for (Residue u : bv) {
    for (Residue v : bv) {
      const Residue x = p.div(p.mul(u, u), v);
      const Residue y = p.div(p.mul(v, v), u);
      if (cubes.contains(x) && cubes.contains(y)) {
        ++r.gamma_size;
        restricted.insert_residue(p.add(u, v));
      }
    }
  }
  r.restricted_sumset = restricted.size();
  r.cube_map_injective = std::gcd(3U, p.value() - 1) == 1;
  r.containment = f_image.is_subset_of(restricted);
  r.size_equality = r.restricted_sumset == r.f_image;
  r.gamma_equality = r.gamma_size == r.cubes * r.cubes;
  const Rational a2 = q(r.size_a) * q(r.size_a);
  const Rational top = q(std::max(r.f_image, r.product_set));
  const Rational pp = q(r.product_set);
  r.plunnecke = cmp(q(r.triple_product) * a2, top * top * top) <= 0;
  r.plunnecke_doubling = cmp(q(r.triple_product) * a2, pp * pp * pp) <= 0;
  return r;
}

}  // namespace expanderlab
