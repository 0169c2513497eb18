#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>

#include "expanderlab/errors.hpp"
#include "expanderlab/real_expand.hpp"
#include "expanderlab/rng.hpp"

using namespace expanderlab;

namespace {

Rational r(long n, long d = 1) { return make_rational(n, d); }

std::uint64_t naive_energy(const RealSet& a) {
  std::map<Rational, std::uint64_t> prod;
  for (const auto& x : a.elements())
    for (const auto& y : a.elements()) ++prod[x * y];
  std::uint64_t e = 0;
  for (auto& [v, c] : prod) e += c * c;
  return e;
}

std::size_t naive_product_set(const RealSet& a) {
  std::set<Rational> out;
  for (const auto& x : a.elements())
    for (const auto& y : a.elements()) out.insert(x * y);
  return out.size();
}

// f(s,t) = st(s^k + t^k) for integer k.
std::size_t naive_image(const RealSet& a, const RealSet& b, long k) {
  std::set<Rational> out;
  for (const auto& s : a.elements())
    for (const auto& t : b.elements()) out.insert(s * t * (rational_pow(s, k) + rational_pow(t, k)));
  return out.size();
}

std::map<Rational, std::size_t> naive_ratio_census(const RealSet& a) {
  std::map<Rational, std::size_t> out;
  for (const auto& x : a.elements())
    for (const auto& y : a.elements()) ++out[Rational(y / x)];
  return out;
}

double curve_residual(const CurveParams& c, double y, double yp) {
  const double a = c.a.get_d(), b = c.b.get_d();
  const double lhs = a * y * y + a * a * y, rhs = b * yp * yp + b * b * yp;
  return std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

}  // namespace

TEST(RealSet, SortsDeduplicatesAndRejectsNonpositive) {
  const RealSet a({r(3), r(1, 2), r(3), r(2, 4)});
  ASSERT_EQ(a.size(), 2u);
  EXPECT_EQ(a[0], r(1, 2));
  EXPECT_EQ(a[1], r(3));
  EXPECT_THROW(RealSet({r(1), r(0)}), DomainError);
  EXPECT_THROW(RealSet({r(-1, 2)}), DomainError);
  EXPECT_EQ(RealSet::interval(3, 4).elements(), (std::vector<Rational>{r(3), r(4), r(5), r(6)}));
  EXPECT_EQ(RealSet::geometric(r(1), r(2), 3).elements(), (std::vector<Rational>{r(1), r(2), r(4)}));
  const auto rnd = RealSet::random(20, 9);
  EXPECT_EQ(rnd.size(), 20u);
  EXPECT_EQ(rnd.elements(), RealSet::random(20, 9).elements());
}

TEST(Star, SpecExamples) {
  const auto s = star(r(1), r(2), r(1), r(2), r(1));
  ASSERT_TRUE(s.exact);
  EXPECT_EQ(s.first, r(2));
  EXPECT_EQ(s.second, r(16));
  const auto m = star(r(1), r(1), r(1), r(1), r(-1));
  EXPECT_EQ(m.first, r(2));
  EXPECT_EQ(m.second, r(2));
  const auto half = star(r(1), r(4), r(1), r(4), r(1, 2));
  EXPECT_FALSE(half.exact);
  EXPECT_NEAR(half.first_approx, 2.0, 1e-12);
  EXPECT_NEAR(half.second_approx, 64.0, 1e-9);
  EXPECT_THROW(star(r(0), r(1), r(1), r(1), r(1)), DomainError);
  EXPECT_THROW(star(r(1), r(1), r(-1), r(1), r(1)), DomainError);
  EXPECT_THROW(star(r(1), r(1), r(1), r(1), r(0)), DomainError);
}

TEST(ExpandingFunction, ExactAndFloatPathsAgree) {
  const ExpandingFunction f2(r(2)), fh(r(1, 2));
  EXPECT_TRUE(f2.exact());
  EXPECT_FALSE(fh.exact());
  EXPECT_EQ(f2.eval_exact(r(1, 2), r(3)), r(1, 2) * 3 * (r(1, 4) + 9));
  EXPECT_NEAR(f2.eval(r(1, 2), r(3)), Rational(r(1, 2) * 3 * (r(1, 4) + 9)).get_d(), 1e-12);
  EXPECT_NEAR(fh.eval(4.0, 9.0), 36.0 * 5.0, 1e-9);
  EXPECT_THROW(ExpandingFunction(r(0)), DomainError);
}

TEST(Energy, SpecExamples) {
  const auto e2 = mult_energy_real(RealSet::of({1, 2}));
  EXPECT_EQ(e2.energy, 6u);
  EXPECT_EQ(e2.product_set, 3u);
  EXPECT_TRUE(e2.cauchy_schwarz);
  const auto g = mult_energy_real(RealSet::geometric(r(1), r(2), 5));
  EXPECT_EQ(g.energy, 85u);
  EXPECT_EQ(g.product_set, 9u);
  EXPECT_TRUE(g.cauchy_schwarz);
  const auto one = mult_energy_real(RealSet::of({7}));
  EXPECT_EQ(one.energy, 1u);
  EXPECT_TRUE(one.cauchy_schwarz);
}

TEST(Energy, RandomSetsMatchNaive) {
  Rng rng(31);
  for (int t = 0; t < 200; ++t) {
    const auto a = RealSet::random(rng.between(1, 16), rng.next());
    const auto e = mult_energy_real(a);
    EXPECT_EQ(e.energy, naive_energy(a));
    EXPECT_EQ(e.product_set, naive_product_set(a));
    EXPECT_TRUE(e.cauchy_schwarz);
    EXPECT_EQ(product_set_size(a), e.product_set);
  }
}

TEST(RatioClasses, PairsRespectSlopes) {
  const auto a = RealSet::random(10, 4, 12, 3);
  const auto classes = ratio_classes(a);
  const auto census = naive_ratio_census(a);
  ASSERT_EQ(classes.size(), census.size());
  std::size_t total = 0;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (i > 0) {
      EXPECT_LT(classes[i - 1].alpha, classes[i].alpha);
    }
    EXPECT_EQ(classes[i].pairs.size(), census.at(classes[i].alpha));
    for (auto [x, y] : classes[i].pairs) EXPECT_EQ(a[y], classes[i].alpha * a[x]);
    total += classes[i].pairs.size();
  }
  EXPECT_EQ(total, 100u);
}

TEST(Dyadic, PairExample) {
  const auto rep = dyadic_levels(RealSet::of({1, 2}));
  EXPECT_EQ(rep.energy, 6u);
  ASSERT_EQ(rep.levels.size(), 2u);
  EXPECT_EQ(rep.levels[0].i, 0u);
  EXPECT_EQ(rep.levels[0].d, 2u);
  EXPECT_EQ(rep.levels[0].mass, 2u);
  EXPECT_EQ(rep.levels[1].i, 1u);
  EXPECT_EQ(rep.levels[1].d, 1u);
  EXPECT_EQ(rep.levels[1].mass, 4u);
  EXPECT_EQ(rep.selected, 1u);
  EXPECT_EQ(rep.d, 1u);
  EXPECT_TRUE(rep.exists_level);
  EXPECT_THROW(dyadic_levels(RealSet::of({5})), DomainError);
}

TEST(Dyadic, GeometricCensusMatchesOracle) {
  const auto a = RealSet::geometric(r(1), r(2), 5);
  std::map<std::uint32_t, std::pair<std::size_t, std::uint64_t>> oracle;
  std::vector<std::size_t> profile;
  for (auto& [alpha, n] : naive_ratio_census(a)) {
    profile.push_back(n);
    const auto i = static_cast<std::uint32_t>(std::floor(std::log2(static_cast<double>(n))));
    oracle[i].first += 1;
    oracle[i].second += n * n;
  }
  EXPECT_EQ(profile, (std::vector<std::size_t>{1, 2, 3, 4, 5, 4, 3, 2, 1}));
  const auto rep = dyadic_levels(a);
  ASSERT_EQ(rep.levels.size(), oracle.size());
  for (const auto& lv : rep.levels) {
    EXPECT_EQ(lv.d, oracle.at(lv.i).first);
    EXPECT_EQ(lv.mass, oracle.at(lv.i).second);
  }
  EXPECT_EQ(rep.energy, 85u);
  EXPECT_TRUE(rep.exists_level);
}

TEST(Dyadic, LevelAlwaysExists) {
  Rng rng(17);
  for (int t = 0; t < 300; ++t) {
    const auto a = RealSet::random(rng.between(2, 32), rng.next());
    const auto rep = dyadic_levels(a);
    EXPECT_TRUE(rep.exists_level);
    EXPECT_EQ(rep.energy, naive_energy(a));
    std::uint64_t mass = 0;
    for (const auto& lv : rep.levels) mass += lv.mass;
    EXPECT_EQ(mass, rep.energy);
  }
}

TEST(SolymosiChain, SmallExamples) {
  const auto c = solymosi_chain(RealSet::of({1, 2, 3}), r(1));
  EXPECT_TRUE(c.pairs_injective);
  EXPECT_TRUE(c.slopes_within);
  EXPECT_TRUE(c.intervals_disjoint);
  EXPECT_TRUE(c.conclusion);
  EXPECT_EQ(c.f_image, naive_image(RealSet::of({1, 2, 3}), RealSet::of({1, 2, 3}), 1));

  const auto two = solymosi_chain(RealSet::of({2, 5}), r(1));
  EXPECT_TRUE(two.conclusion);
  EXPECT_GE(two.d, 1u);
  EXPECT_LE(two.d, 3u);

  EXPECT_THROW(solymosi_chain(RealSet::of({1, 2}), r(0)), DomainError);
  EXPECT_THROW(solymosi_chain(RealSet::of({1}), r(1)), DomainError);
}

TEST(SolymosiChain, NegativeOneIsSumProduct) {
  Rng rng(5);
  for (int t = 0; t < 30; ++t) {
    const auto a = RealSet::random(rng.between(2, 12), rng.next());
    const auto c = solymosi_chain(a, r(-1));
    EXPECT_EQ(c.f_image, sumset_size(a));
    const auto dy = dyadic_levels(a);
    EXPECT_EQ(c.level, dy.selected);
    EXPECT_EQ(c.d, dy.d);
    EXPECT_TRUE(c.conclusion);
  }
}

TEST(SolymosiChain, RandomSetsAllExponents) {
  Rng rng(23);
  for (const auto& k : {r(1), r(2), r(1, 2), r(-1)}) {
    for (int t = 0; t < 40; ++t) {
      const auto a = RealSet::random(rng.between(2, 16), rng.next());
      const auto c = solymosi_chain(a, k);
      EXPECT_TRUE(c.conclusion) << k.get_str();
      EXPECT_TRUE(c.pairs_injective) << k.get_str();
      if (c.indeterminate == 0) {
        EXPECT_TRUE(c.slopes_within) << k.get_str();
        EXPECT_TRUE(c.intervals_disjoint) << k.get_str();
        EXPECT_EQ(c.union_size, c.chain_sum) << k.get_str();
      }
      const auto sq = static_cast<std::uint64_t>(c.f_image) * c.f_image;
      EXPECT_GE(sq, c.level_bound);
      // star products are points of f(A,A) x f(A,A)
      EXPECT_LE(c.union_size, sq);
    }
  }
}

TEST(ImageSize, IntegerExponentsMatchNaive) {
  Rng rng(2);
  for (long k : {1L, 2L, -1L, -2L}) {
    for (int t = 0; t < 10; ++t) {
      const auto a = RealSet::random(rng.between(1, 10), rng.next());
      const auto b = RealSet::random(rng.between(1, 10), rng.next());
      EXPECT_EQ(image_size(a, b, ExpandingFunction(r(k))), naive_image(a, b, k));
    }
  }
}

TEST(Pp71, SpecExamples) {
  const auto interval = RealSet::interval(1, 8);
  const auto rep = pp71_check(interval, r(1));
  EXPECT_EQ(rep.theorem_id, "pp71");
  EXPECT_EQ(rep.lhs, std::max(naive_image(interval, interval, 1), naive_product_set(interval)));
  EXPECT_NEAR(rep.rhs, std::cbrt(4096.0 / std::log(8.0)), 1e-9);
  EXPECT_TRUE(rep.holds.value());

  const auto geo = RealSet::geometric(r(1), r(2), 8);
  EXPECT_EQ(naive_product_set(geo), 15u);
  const auto g = pp71_check(geo, r(1));
  EXPECT_EQ(g.lhs, naive_image(geo, geo, 1));
  EXPECT_GT(g.lhs, 15u);
  EXPECT_TRUE(g.holds.value());

  const auto sp = pp71_check(interval, r(-1));
  EXPECT_EQ(sp.lhs, std::max<std::uint64_t>(15, naive_product_set(interval)));
  EXPECT_TRUE(sp.holds.value());

  EXPECT_THROW(pp71_check(RealSet::of({1, 2}), r(1)), DomainError);
}

TEST(Pp71, ChainHoldsOnRandomSets) {
  Rng rng(71);
  for (const auto& k : {r(1), r(2), r(1, 2), r(-1)}) {
    for (int t = 0; t < 30; ++t) {
      const auto a = RealSet::random(rng.between(3, 20), rng.next());
      EXPECT_TRUE(pp71_check(a, k).holds.value()) << k.get_str();
    }
  }
}

TEST(Curves, IntersectionCubicByExpansion) {
  const CurveParams c1(r(1), r(2)), c2(r(2), r(1));
  EXPECT_EQ(intersection_cubic(c1, c2), QPoly({r(-2), r(-7), r(7), r(2)}));
  // (a - b z^2)(d^2 z - c^2) - (c - d z^2)(b^2 z - a^2) at random parameters
  Rng rng(4);
  for (int t = 0; t < 20; ++t) {
    const CurveParams p1(r(static_cast<long>(rng.between(1, 9)), static_cast<long>(rng.between(1, 5))),
                         r(static_cast<long>(rng.between(1, 9))));
    const CurveParams p2(r(static_cast<long>(rng.between(1, 9))), r(static_cast<long>(rng.between(1, 9)), 2));
    const Rational &a = p1.a, &b = p1.b, &c = p2.a, &d = p2.b;
    const QPoly lhs = QPoly({a, 0, -b}) * QPoly({-c * c, d * d});
    const QPoly rhs = QPoly({c, 0, -d}) * QPoly({-a * a, b * b});
    EXPECT_EQ(intersection_cubic(p1, p2), lhs - rhs);
  }
}

TEST(Curves, SpecIntersection) {
  const CurveParams c1(r(1), r(2)), c2(r(2), r(1));
  const auto pts = curve_intersect(c1, c2);
  ASSERT_EQ(pts.size(), 3u);
  std::vector<double> zs;
  bool found = false;
  for (const auto& pt : pts) {
    EXPECT_TRUE(pt.verified);
    zs.push_back(pt.z);
    EXPECT_LT(curve_residual(c1, pt.y, pt.yp), 1e-9);
    EXPECT_LT(curve_residual(c2, pt.y, pt.yp), 1e-9);
    if (pt.z_exact && *pt.z_exact == 1) {
      found = true;
      EXPECT_EQ(*pt.y_exact, r(-3));
      EXPECT_EQ(*pt.yp_exact, r(-3));
    }
  }
  EXPECT_TRUE(found);
  std::sort(zs.begin(), zs.end());
  EXPECT_NEAR(zs[0], (-9 - std::sqrt(65.0)) / 4, 1e-9);
  EXPECT_NEAR(zs[1], (-9 + std::sqrt(65.0)) / 4, 1e-9);
  EXPECT_NEAR(zs[2], 1.0, 1e-12);
  EXPECT_TRUE(c1.contains(r(-3), r(-3)));
  EXPECT_TRUE(c2.contains(r(-3), r(-3)));
}

TEST(Curves, Errors) {
  EXPECT_THROW(curve_intersect(CurveParams(r(1), r(2)), CurveParams(r(1), r(2))), DomainError);
  EXPECT_THROW(curve_intersect(CurveParams(r(1), r(1)), CurveParams(r(1), r(2))), DomainError);
  EXPECT_THROW(CurveParams(r(0), r(2)), DomainError);
}

TEST(Curves, OneTwoOneThree) {
  const CurveParams c1(r(1), r(2)), c2(r(1), r(3));
  const auto pts = curve_intersect(c1, c2);
  EXPECT_LE(pts.size(), 3u);
  for (const auto& pt : pts) {
    EXPECT_TRUE(pt.verified);
    EXPECT_LT(curve_residual(c1, pt.y, pt.yp), 1e-9);
    EXPECT_LT(curve_residual(c2, pt.y, pt.yp), 1e-9);
  }
}

TEST(Curves, ExhaustiveSmallParameters) {
  std::size_t pairs = 0;
  for (long a = 1; a <= 6; ++a)
    for (long b = 1; b <= 6; ++b)
      for (long c = 1; c <= 6; ++c)
        for (long d = 1; d <= 6; ++d) {
          if (a == b || c == d || (a == c && b == d)) continue;
          const CurveParams c1(r(a), r(b)), c2(r(c), r(d));
          const auto pts = curve_intersect(c1, c2);
          ASSERT_LE(pts.size(), 3u);
          for (const auto& pt : pts) {
            ASSERT_TRUE(pt.verified) << a << b << c << d;
            EXPECT_NE(pt.y, 0.0);
            EXPECT_NE(pt.yp, 0.0);
            if (pt.y_exact) {
              EXPECT_TRUE(c1.contains(*pt.y_exact, *pt.yp_exact));
              EXPECT_TRUE(c2.contains(*pt.y_exact, *pt.yp_exact));
            }
            EXPECT_LT(curve_residual(c1, pt.y, pt.yp), 1e-8);
            EXPECT_LT(curve_residual(c2, pt.y, pt.yp), 1e-8);
          }
          ++pairs;
        }
  EXPECT_EQ(pairs, 870u);
}

TEST(Curves, Duality) {
  Rng rng(1000);
  auto rand_q = [&] {
    const long n = static_cast<long>(rng.between(1, 20));
    return r(rng.coin() ? n : -n, static_cast<long>(rng.between(1, 6)));
  };
  std::size_t on_curve = 0;
  for (int t = 0; t < 1000; ++t) {
    const Rational a = rand_q();
    Rational b = rand_q();
    Rational y, yp;
    switch (t % 4) {
      case 0: y = b; yp = a; break;
      case 1: y = -a; yp = -b; break;
      default: y = rand_q(); yp = rand_q(); break;
    }
    if (sgn(y) == 0 || sgn(yp) == 0) continue;
    const bool fwd = CurveParams(a, b).contains(y, yp);
    const bool back = CurveParams(y, yp).contains(a, b);
    EXPECT_EQ(fwd, back);
    on_curve += fwd;
  }
  EXPECT_GE(on_curve, 500u);
}

TEST(Incidences, MatchesBruteForce) {
  Rng rng(9);
  std::vector<RealPoint> points;
  std::vector<CurveParams> curves;
  for (long a = 1; a <= 4; ++a)
    for (long b = 1; b <= 4; ++b) {
      curves.emplace_back(r(a), r(b));
      points.emplace_back(r(a), r(b));
    }
  points.emplace_back(r(-3), r(-3));
  points.emplace_back(r(2), r(1));
  const auto rep = incidence_count(points, curves);
  std::uint64_t brute = 0, diag_c = 0, diag_p = 0, off = 0;
  for (const auto& c : curves)
    for (const auto& [y, yp] : points) {
      if (!c.contains(y, yp)) continue;
      ++brute;
      if (c.a == c.b) ++diag_c;
      else if (y == yp) ++diag_p;
      else ++off;
    }
  EXPECT_EQ(rep.points, points.size());
  EXPECT_EQ(rep.curves, curves.size());
  EXPECT_EQ(rep.incidences, brute);
  EXPECT_EQ(rep.diagonal_curves, diag_c);
  EXPECT_EQ(rep.diagonal_points, diag_p);
  EXPECT_EQ(rep.off_diagonal, off);
}

TEST(Pp73, PairExample) {
  const auto a = RealSet::of({1, 2});
  const auto rep = pp73_check(a, a);
  EXPECT_EQ(rep.f_image, naive_image(a, a, 1));
  EXPECT_TRUE(rep.balanced);
  std::uint64_t brute = 0;
  for (const auto& x : a.elements())
    for (const auto& xp : a.elements())
      for (const auto& y : a.elements())
        for (const auto& yp : a.elements()) brute += CurveParams(x, xp).contains(y, yp);
  EXPECT_EQ(rep.incidences.incidences, brute);
  EXPECT_TRUE(rep.cauchy_schwarz);
  EXPECT_GE(rep.f_image * brute, 16u);
  EXPECT_TRUE(rep.report.holds.value());
  EXPECT_NEAR(rep.report.rhs, std::cbrt(16.0), 1e-12);
}

TEST(Pp73, DiagonalCurvesHaveAtMostTwoSolutionsPerRow) {
  const auto b = RealSet::random(12, 3);
  for (const auto& a : {r(1), r(3, 2), r(5)}) {
    const CurveParams c(a, a);
    for (const auto& y : b.elements()) {
      std::size_t sols = 0;
      for (const auto& yp : b.elements()) sols += c.contains(y, yp);
      EXPECT_LE(sols, 2u);
    }
  }
}

TEST(Pp73, UnbalancedTakesEasyBound) {
  const auto a = RealSet::interval(1, 9), b = RealSet::of({1, 2});
  const auto rep = pp73_check(a, b);
  EXPECT_FALSE(rep.balanced);
  EXPECT_EQ(*rep.report.rhs_exact, r(9));
  EXPECT_TRUE(rep.report.holds.value());
  EXPECT_THROW(pp73_check(RealSet(), b), DomainError);
}

TEST(Pp73, RandomPairsHold) {
  Rng rng(73);
  for (int t = 0; t < 40; ++t) {
    const auto a = RealSet::random(rng.between(1, 10), rng.next());
    const auto b = RealSet::random(rng.between(1, 10), rng.next());
    const auto rep = pp73_check(a, b);
    EXPECT_TRUE(rep.cauchy_schwarz);
    EXPECT_TRUE(rep.report.holds.value());
    EXPECT_EQ(rep.f_image, naive_image(a, b, 1));
  }
}

TEST(QPoly, DivmodAndGcd) {
  const QPoly p({r(-2), r(-7), r(7), r(2)});
  const QPoly lin({r(-1), r(1)});
  const auto [quo, rem] = divmod(p, lin);
  EXPECT_TRUE(rem.is_zero());
  EXPECT_EQ(quo, QPoly({r(2), r(9), r(2)}));
  EXPECT_EQ(quo * lin, p);
  EXPECT_EQ(gcd(p, QPoly({r(1), r(-2), r(1)})), lin);
  EXPECT_EQ(gcd(QPoly({r(1), r(1)}), QPoly({r(1), r(2)})), QPoly({r(1)}));
  EXPECT_EQ(p(r(1)), r(0));
  EXPECT_EQ(p.derivative(), QPoly({r(-7), r(14), r(6)}));
  EXPECT_EQ(p.monic().leading(), r(1));
  EXPECT_EQ(QPoly({r(0), r(0)}).degree(), -1);
}

TEST(QPoly, SquarefreeAndSturm) {
  // (z - 1)^2 (z^2 - 2)
  const QPoly p = QPoly({r(-1), r(1)}) * QPoly({r(-1), r(1)}) * QPoly({r(-2), r(0), r(1)});
  const auto sf = squarefree_part(p);
  EXPECT_EQ(sf, QPoly({r(-1), r(1)}) * QPoly({r(-2), r(0), r(1)}));
  const SturmSequence st(sf);
  EXPECT_EQ(st.count(r(-10), r(10)), 3);
  EXPECT_EQ(st.count(r(0), r(2)), 2);
  EXPECT_EQ(st.count(r(-1), r(0)), 0);
  const auto roots = isolate_real_roots(p, r(1, 1000000));
  ASSERT_EQ(roots.size(), 3u);
  EXPECT_NEAR(roots[0].approx(), -std::sqrt(2.0), 1e-6);
  EXPECT_NEAR(roots[1].approx(), 1.0, 1e-6);
  EXPECT_NEAR(roots[2].approx(), std::sqrt(2.0), 1e-6);
  for (const auto& rt : roots) {
    if (!rt.exact) {
      EXPECT_LE(rt.hi - rt.lo, r(1, 1000000));
    }
  }
  EXPECT_TRUE(shares_root(sf, roots[2], QPoly({r(-2), r(0), r(1)})));
  EXPECT_FALSE(shares_root(sf, roots[1], QPoly({r(-2), r(0), r(1)})));
}

TEST(QPoly, SimplestBetween) {
  EXPECT_EQ(simplest_between(r(1, 3), r(1, 2)), r(1, 2));
  EXPECT_EQ(simplest_between(r(3, 10), r(4, 10)), r(1, 3));
  EXPECT_EQ(simplest_between(r(5, 2), r(5, 2)), r(5, 2));
}
