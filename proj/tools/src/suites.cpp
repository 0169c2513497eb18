#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "cli.hpp"
#include "expanderlab/errors.hpp"
#include "expanderlab/fp_sets.hpp"
#include "expanderlab/real_expand.hpp"
#include "expanderlab/report.hpp"
#include "expanderlab/rng.hpp"
#include "expanderlab/spgraph.hpp"

namespace expanderlab::cli {

namespace {

using Task = std::function<std::vector<BoundReport>()>;

Rational exact(std::uint64_t x) { return Rational(mpz_class(static_cast<unsigned long>(x))); }

double safe_ratio(double lhs, double rhs) {
  if (rhs == 0) return lhs == 0 ? 1.0 : std::numeric_limits<double>::infinity();
  return lhs / rhs;
}

BoundReport record(const std::string& suite, const std::string& id, std::uint32_t p,
                   std::string family, std::uint64_t lhs, double rhs, std::optional<bool> holds,
                   std::uint64_t seed) {
  BoundReport r;
  r.suite = suite;
  r.theorem_id = id;
  r.p = p;
  r.family = std::move(family);
  r.lhs = lhs;
  r.rhs = rhs;
  r.ratio = safe_ratio(static_cast<double>(lhs), rhs);
  r.holds = holds;
  r.seed = seed;
  return r;
}

BoundReport exact_record(const std::string& suite, const std::string& id, std::uint32_t p,
                         std::string family, std::uint64_t lhs, std::uint64_t rhs,
                         std::optional<bool> holds, std::uint64_t seed) {
  BoundReport r = record(suite, id, p, std::move(family), lhs, static_cast<double>(rhs), holds, seed);
  r.rhs_exact = exact(rhs);
  return r;
}

std::size_t trials_or(const RunConfig& cfg, std::size_t fallback) {
  return cfg.trials.value_or(fallback);
}

std::vector<std::uint32_t> primes_or(const RunConfig& cfg, const char* fallback) {
  return cfg.primes.empty() ? parse_primes(fallback) : cfg.primes;
}

std::uint64_t cell_seed(const RunConfig& cfg, std::uint32_t p, std::uint64_t j) {
  return mix_seed(mix_seed(cfg.seed, p), j);
}

FpSet generate_or_usage(const FamilySpec& spec, PrimeModulus p) {
  try {
    return generate(spec, p);
  } catch (const DomainError& e) {
    throw UsageError("family " + describe(spec) + " is not available for p=" +
                     std::to_string(p.value()) + ": " + e.what());
  }
}

std::vector<FamilySpec> families_for(const RunConfig& cfg, PrimeModulus p) {
  if (cfg.families.empty()) return structured_families(p);
  std::vector<FamilySpec> out;
  for (const auto& text : cfg.families) {
    try {
      out.push_back(parse_family(text));
    } catch (const DomainError& e) {
      throw UsageError("bad family '" + text + "': " + e.what());
    }
  }
  return out;
}

RandomFamily random_family(PrimeModulus p, Rng& rng) {
  return RandomFamily{static_cast<std::uint32_t>(rng.between(1, p.group_order())), rng.next()};
}

// Inputs for one cell of the finite-field suites.
struct Triple {
  FpSet a, b, c;
  std::string label;
  std::uint64_t seed;
};

// Random triples first, then A = B = C over the structured (or explicit)
// families.
std::vector<std::function<Triple()>> triples_for(const RunConfig& cfg, std::uint32_t pv,
                                                 std::size_t trials) {
  const PrimeModulus p(pv);
  std::vector<std::function<Triple()>> out;
  for (std::size_t j = 0; j < trials; ++j) {
    const std::uint64_t seed = cell_seed(cfg, pv, j);
    out.push_back([p, seed] {
      Rng rng(seed);
      const auto fa = random_family(p, rng), fb = random_family(p, rng), fc = random_family(p, rng);
      return Triple{generate(fa, p), generate(fb, p), generate(fc, p),
                    describe(fa) + ";" + describe(fb) + ";" + describe(fc), seed};
    });
  }
  for (const auto& spec : families_for(cfg, p)) {
    const FpSet a = generate_or_usage(spec, p);
    const std::uint64_t seed = cfg.seed;
    out.push_back([a, spec, seed] { return Triple{a, a, a, describe(spec), seed}; });
  }
  return out;
}

struct Tables {
  FuncTable g, h;
  std::string label;
};

Tables tables_for(const RunConfig& cfg, PrimeModulus p, std::uint64_t seed) {
  const FpSet units = FpSet::multiplicative_group(p);
  if (cfg.tables == "random") {
    return {FuncTable::random(units, mix_seed(seed, 101)), FuncTable::random(units, mix_seed(seed, 202)),
            "g,h=random"};
  }
  return {FuncTable::identity(units), FuncTable::identity(units), "g=h=id"};
}

// --- graph -----------------------------------------------------------------------

std::vector<BoundReport> graph_cell(const RunConfig& cfg, std::uint32_t pv, std::size_t j,
                                    bool verify) {
  const PrimeModulus p(pv);
  const FpSet units = FpSet::multiplicative_group(p);
  const std::uint64_t seed = j == 0 ? cfg.seed : cell_seed(cfg, pv, j);
  FuncTable g = FuncTable::identity(units);
  std::optional<FuncTable> gp;
  std::string label = "g=id";
  if (j > 0) {
    g = FuncTable::random(units, mix_seed(seed, 1));
    gp = FuncTable::random(units, mix_seed(seed, 2));
    label = "g,g'=random";
  }
  const std::uint64_t d = pv - 2;
  std::vector<BoundReport> out;
  std::optional<SumProductGraph> graph;
  try {
    graph.emplace(SumProductGraph::build(EdgeRule::standard(g, gp)));
  } catch (const RuleViolation&) {
    out.push_back(exact_record("graph", "regularity", pv, label, 0, d, false, seed));
    return out;
  }
  out.push_back(exact_record("graph", "regularity", pv, label, graph->degree(), d,
                             graph->degree() == d, seed));
  if (!verify) return out;

  const GramMatrix gm = gram(*graph);
  const auto dec = decompose_gram(gm);
  const std::uint64_t ed = 3ULL * pv - 6;
  out.push_back(exact_record("graph", "gram_decomposition", pv, label, dec.ok ? dec.expected_degree : 0,
                             ed, dec.ok && dec.census_ok, seed));
  const bool connected = connectivity(gm);
  out.push_back(exact_record("graph", "connectivity", pv, label, connected ? 1 : 0, 1,
                             pv > 5 ? std::optional<bool>(connected) : std::nullopt, seed));

  const std::size_t n = gm.size();
  std::uint64_t compared = 0, matching = 0;
  auto compare = [&](std::size_t u, std::size_t v) {
    const auto [a, b] = graph->vertex(u);
    const auto [c, dd] = graph->vertex(v);
    const auto count = count_solutions(FpElem(a, p), FpElem(b, p), FpElem(c, p), FpElem(dd, p), g, gp);
    ++compared;
    if (count == static_cast<std::uint64_t>(gm(u, v))) ++matching;
  };
  if (pv <= 13) {
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) compare(u, v);
    }
  } else {
    Rng rng(mix_seed(seed, 3));
    for (int s = 0; s < 1000; ++s) compare(rng.below(n), rng.below(n));
  }
  out.push_back(exact_record("graph", "oracle", pv, label, matching, compared, matching == compared, seed));
  return out;
}

std::vector<Task> graph_tasks(const RunConfig& cfg) {
  if (!cfg.action.empty() && cfg.action != "verify") throw UsageError("graph takes only 'verify'");
  const bool verify = cfg.action == "verify";
  std::vector<Task> tasks;
  for (auto p : primes_or(cfg, "7..31")) {
    const std::size_t tables = 1 + trials_or(cfg, 5);
    for (std::size_t j = 0; j < tables; ++j) {
      tasks.push_back([&cfg, p, j, verify] { return graph_cell(cfg, p, j, verify); });
    }
  }
  return tasks;
}

// --- spectral --------------------------------------------------------------------

VertexSet random_vertices(std::size_t n, Rng& rng) {
  const std::size_t size = rng.between(1, n);
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  rng.partial_shuffle(pool, size);
  VertexSet s(n);
  for (std::size_t i = 0; i < size; ++i) s.insert(pool[i]);
  return s;
}

std::vector<BoundReport> spectral_cell(const RunConfig& cfg, std::uint32_t pv) {
  const PrimeModulus p(pv);
  const auto graph = SumProductGraph::build(EdgeRule::standard(FuncTable::identity(FpSet::multiplicative_group(p))));
  const std::size_t n = graph.vertex_count();
  const std::string label = "g=id";
  const std::uint64_t seed = cell_seed(cfg, pv, 0);
  SpectralOptions opts = cfg.spectral;
  opts.seed = seed;
  const SpectralReport rep = eigs_top2(graph, opts);

  std::vector<BoundReport> out;
  const double t1 = static_cast<double>(pv - 2) * (pv - 2);
  BoundReport r = record("spectral", "theta1", pv, label, static_cast<std::uint64_t>(t1), rep.theta1,
                         std::abs(rep.theta1 - t1) <= 1e-6 * t1, seed);
  out.push_back(r);
  const std::uint64_t bound = 4ULL * pv - 9;
  out.push_back(record("spectral", "theta2", pv, label, bound, rep.theta2,
                       rep.theta2 <= static_cast<double>(bound) + 1e-6, seed));

  double dot = 0, norm = 0;
  for (double x : rep.eigenvector2) {
    dot += x;
    norm += x * x;
  }
  const double ortho = norm > 0 ? std::abs(dot) / std::sqrt(norm * static_cast<double>(n)) : 1.0;
  BoundReport o = record("spectral", "orthogonality", pv, label, 0, ortho, ortho <= 1e-6, seed);
  o.ratio = 0;
  out.push_back(o);

  const GramMatrix gm = gram(graph);
  const PerronCheck perron = verify_perron(gm, opts);
  out.push_back(record("spectral", "perron", pv, label, static_cast<std::uint64_t>(perron.row_sum),
                       perron.complement_top, perron.holds, seed));

  if (n <= cfg.spectral.dense_limit) {
    SpectralOptions dense = opts, power = opts;
    dense.method = EigenMethod::dense;
    power.method = EigenMethod::deflated_power;
    const auto rd = rep.method == EigenMethod::dense ? rep : eigs_top2(graph, dense);
    const auto rp = rep.method == EigenMethod::deflated_power ? rep : eigs_top2(graph, power);
    const double diff = std::max(std::abs(rd.theta1 - rp.theta1) / rd.theta1,
                                 std::abs(rd.theta2 - rp.theta2) / rd.theta2);
    BoundReport a = record("spectral", "method_agreement", pv, label, 0, diff, diff <= 1e-5, seed);
    a.ratio = 0;
    out.push_back(a);
  }

  const std::size_t pairs = trials_or(cfg, 200);
  for (std::size_t j = 0; j < pairs; ++j) {
    const std::uint64_t pseed = cell_seed(cfg, pv, j + 1);
    Rng rng(pseed);
    const VertexSet s = random_vertices(n, rng);
    const VertexSet t = random_vertices(n, rng);
    const auto d = discrepancy_check(graph, s, t, rep);
    const auto lhs_signed = static_cast<std::int64_t>(d.e_st) * static_cast<std::int64_t>(n) -
                            static_cast<std::int64_t>(s.size() * t.size() * graph.degree());
    BoundReport x = record("spectral", "th1", pv, label, static_cast<std::uint64_t>(std::llabs(lhs_signed)),
                           d.rhs, d.holds, pseed);
    x.size_a = s.size();
    x.size_b = t.size();
    out.push_back(x);
  }
  return out;
}

std::vector<Task> spectral_tasks(const RunConfig& cfg) {
  if (!cfg.action.empty()) throw UsageError("spectral takes no action");
  std::vector<Task> tasks;
  for (auto p : primes_or(cfg, "7..61")) tasks.push_back([&cfg, p] { return spectral_cell(cfg, p); });
  return tasks;
}

// --- bounds ----------------------------------------------------------------------

BoundReport proof_record(const char* id, const ProofSets& ps, const Triple& t) {
  BoundReport r = exact_record("bounds", id, t.a.modulus().value(), t.label, ps.e_st * ps.m,
                               ps.retained_triples, ps.all_ok(), t.seed);
  r.m = ps.m;
  r.size_a = t.a.size();
  r.size_b = t.b.size();
  r.size_c = t.c.size();
  return r;
}

BoundReport labelled(BoundReport r, const Triple& t, const std::string& tables) {
  r.family = t.label + (tables.empty() ? "" : " " + tables);
  r.seed = t.seed;
  return r;
}

std::vector<BoundReport> eqca_cell(const RunConfig& cfg, std::uint32_t pv) {
  const PrimeModulus p(pv);
  const std::uint64_t seed = cell_seed(cfg, pv, 1u << 20);
  const Tables tb = tables_for(cfg, p, seed);
  const std::uint64_t m = multiplicity(pointwise_product(tb.g, tb.h));
  Rng rng(seed);
  std::uint64_t worst = 0;
  const auto q = p.group_order();
  for (int s = 0; s < 1000; ++s) {
    Residue u, v, w, t;
    if (s % 2 == 0) {
      // From a genuine triple, so the count is at least one.
      const auto x = static_cast<Residue>(rng.between(1, q));
      const auto y = static_cast<Residue>(rng.between(1, q));
      const auto z = static_cast<Residue>(rng.between(1, q));
      u = p.mul(tb.g(x), p.add(tb.h(x), y));
      v = p.mul(y, z);
      t = p.mul(z, tb.h(x));
      w = p.div(p.mul(z, tb.g(t)), tb.g(x));
    } else {
      u = static_cast<Residue>(rng.below(pv));
      v = static_cast<Residue>(rng.between(1, q));
      w = static_cast<Residue>(rng.between(1, q));
      t = static_cast<Residue>(rng.between(1, q));
    }
    worst = std::max(worst, count_eqca(tb.g, tb.h, u, v, w, t));
  }
  BoundReport r = exact_record("bounds", "eqca", pv, tb.label, worst, m, worst <= m, seed);
  r.m = m;
  return {r};
}

std::vector<Task> bounds_tasks(const RunConfig& cfg, const std::string& action) {
  std::vector<Task> tasks;
  const bool growth = action == "growth";
  const auto primes = primes_or(cfg, growth ? "5,11,17,23,29" : "7,11,13");
  const std::size_t trials =
      trials_or(cfg, (action == "t1" || action == "t2" || action == "nnn1" || action == "t3") ? 100 : 20);

  std::optional<std::uint32_t> k_int;
  if (action == "t3") {
    Rational k;
    try {
      k = Rational(cfg.k);
      k.canonicalize();
    } catch (const std::exception&) {
      throw UsageError("bad --k '" + cfg.k + "'");
    }
    if (!is_integer(k) || sgn(k) <= 0 || k > 1000000) throw UsageError("t3 needs a positive integer --k");
    k_int = static_cast<std::uint32_t>(k.get_num().get_ui());
  }

  for (auto pv : primes) {
    const PrimeModulus p(pv);
    for (auto& make : triples_for(cfg, pv, trials)) {
      tasks.push_back([&cfg, action, make, p, k_int]() -> std::vector<BoundReport> {
        const Triple t = make();
        std::vector<BoundReport> out;
        if (action == "t1" || action == "t2") {
          const Tables tb = tables_for(cfg, p, t.seed);
          if (action == "t1") {
            out.push_back(labelled(t1_check(t.a, t.b, t.c, tb.g, tb.h), t, tb.label));
            out.push_back(proof_record("t1_proof_sets", proof_sets_t1(t.a, t.b, t.c, tb.g, tb.h), t));
          } else {
            out.push_back(labelled(t2_check(t.a, t.b, t.c, tb.g, tb.h), t, tb.label));
            out.push_back(proof_record("t2_proof_sets", proof_sets_t2(t.a, t.b, t.c, tb.g, tb.h), t));
            out.push_back(labelled(sum_product_corollary(t.a, tb.g), t, tb.label));
          }
        } else if (action == "t3") {
          const FpSet units = FpSet::multiplicative_group(p);
          FuncTable g = FuncTable::monomial(units, cfg.u), h = FuncTable::monomial(units, cfg.v);
          std::string label = "g=x^" + std::to_string(cfg.u) + ",h=y^" + std::to_string(cfg.v);
          if (cfg.tables == "random") {
            g = FuncTable::random(units, mix_seed(t.seed, 101));
            h = FuncTable::random(units, mix_seed(t.seed, 202));
            label = "g,h=random";
          }
          out.push_back(labelled(t3_check(t.a, t.b, t.c, g, h, *k_int, cfg.cap), t,
                                 label + ",k=" + std::to_string(*k_int)));
        } else if (action == "nnn1") {
          out.push_back(labelled(nnn1_check(t.a, t.b, t.c, cfg.u, cfg.v), t,
                                 "u=" + std::to_string(cfg.u) + ",v=" + std::to_string(cfg.v)));
        } else if (action == "corollaries") {
          for (auto& r : corollary_checks(t.a)) out.push_back(labelled(std::move(r), t, ""));
        } else if (action == "shifted") {
          const FpSet units = FpSet::multiplicative_group(p);
          const FuncTable w = cfg.tables == "random" ? FuncTable::random(units, mix_seed(t.seed, 303))
                                                     : FuncTable::identity(units);
          const std::string wl = cfg.tables == "random" ? "w=random" : "w=id";
          const auto f = FnForm::xy_times_x_plus_y(p);
          out.push_back(labelled(shifted_eval(t.a, f, w, ShiftKind::product), t, wl));
          out.push_back(labelled(shifted_eval(t.a, f, w, ShiftKind::sum), t, wl));
        } else {
          const GrowthReport g = growth_chain(t.a);
          const std::uint32_t pv2 = p.value();
          const auto base = [&](const char* id, std::uint64_t lhs, std::uint64_t rhs, std::optional<bool> holds) {
            BoundReport r = exact_record("growth", id, pv2, t.label, lhs, rhs, holds, t.seed);
            r.size_a = r.size_b = r.size_c = g.size_a;
            return r;
          };
          out.push_back(base("growth_containment", g.f_image, g.restricted_sumset, g.containment));
          out.push_back(base("growth_equality", g.restricted_sumset, g.f_image,
                             g.cube_map_injective ? std::optional<bool>(g.size_equality) : std::nullopt));
          out.push_back(base("growth_gamma", g.gamma_size, static_cast<std::uint64_t>(g.cubes) * g.cubes,
                             g.cube_map_injective ? std::optional<bool>(g.gamma_equality) : std::nullopt));
          // |A.A.A| |A|^2 <= |A.A|^3, so here ratio <= 1 is the good side.
          const std::uint64_t n = g.size_a;
          const std::uint64_t aa = g.product_set;
          out.push_back(base("plunnecke", g.triple_product * n * n, aa * aa * aa, g.plunnecke_doubling));
          BoundReport kr = base("growth_k", std::max(g.f_image, g.product_set), n, std::nullopt);
          kr.exponent = empirical_exponent(kr.lhs, n);
          out.push_back(kr);
        }
        return out;
      });
    }
    if (action == "t1") tasks.push_back([&cfg, pv] { return eqca_cell(cfg, pv); });
  }
  return tasks;
}

// --- real --------------------------------------------------------------------------

Rational parse_k(const std::string& text) {
  Rational k;
  try {
    k = Rational(text);
    k.canonicalize();
  } catch (const std::exception&) {
    throw UsageError("bad --k '" + text + "'");
  }
  if (sgn(k) == 0) throw UsageError("--k must be nonzero");
  return k;
}

struct LabelledSet {
  RealSet set;
  std::string label;
  std::uint64_t seed;
};

LabelledSet random_real(std::uint64_t seed, std::size_t lo, std::size_t hi) {
  Rng rng(seed);
  const std::size_t size = rng.between(lo, hi);
  const std::uint64_t s = rng.next();
  return {RealSet::random(size, s), "random(" + std::to_string(size) + "," + std::to_string(s) + ")", seed};
}

std::vector<BoundReport> energy_cell(const LabelledSet& ls) {
  std::vector<BoundReport> out;
  const auto e = mult_energy_real(ls.set);
  const std::uint64_t n = ls.set.size();
  BoundReport r = exact_record("real", "energy_cs", 0, ls.label, e.energy * e.product_set, n * n * n * n,
                               e.cauchy_schwarz, ls.seed);
  r.size_a = r.size_b = r.size_c = n;
  out.push_back(r);
  if (n >= 2) {
    const auto d = dyadic_levels(ls.set);
    std::uint64_t level = std::uint64_t{1} << (2 * (d.selected + 1));
    BoundReport x = record("real", "dyadic", 0, ls.label, level * d.d, d.threshold, d.exists_level, ls.seed);
    x.size_a = x.size_b = x.size_c = n;
    out.push_back(x);
  }
  return out;
}

std::vector<BoundReport> pp71_cell(const LabelledSet& ls, const Rational& k) {
  std::vector<BoundReport> out;
  const std::string label = ls.label + " k=" + to_string(k);
  BoundReport r = pp71_check(ls.set, k);
  r.family = label;
  r.seed = ls.seed;
  out.push_back(r);
  const ChainReport c = solymosi_chain(ls.set, k);
  // Window geometry only works for k >= -1; below that the numeric chain is all we check.
  bool ok = c.conclusion;
  if (k >= -1) ok = ok && c.pairs_injective && c.slopes_within && c.intervals_disjoint;
  const std::uint64_t fa = c.f_image;
  BoundReport x = exact_record("real", "chain", 0, label, fa * fa, c.level_bound, ok, ls.seed);
  x.size_a = x.size_b = x.size_c = ls.set.size();
  out.push_back(x);
  return out;
}

std::vector<BoundReport> curves_cell(std::uint32_t a, std::uint32_t b, std::uint32_t max_param) {
  const CurveParams c1(make_rational(a), make_rational(b));
  std::uint64_t worst = 0;
  bool verified = true;
  for (std::uint32_t c = 1; c <= max_param; ++c) {
    for (std::uint32_t d = 1; d <= max_param; ++d) {
      if (c == d || (c == a && d == b)) continue;
      const auto pts = curve_intersect(c1, CurveParams(make_rational(c), make_rational(d)));
      worst = std::max<std::uint64_t>(worst, pts.size());
      for (const auto& pt : pts) verified = verified && pt.verified;
    }
  }
  const std::string label = "a=" + std::to_string(a) + ",b=" + std::to_string(b) +
                            ",params<=" + std::to_string(max_param);
  return {exact_record("real", "curves", 0, label, worst, 3, worst <= 3 && verified, 0)};
}

Rational random_param(Rng& rng) {
  Rational q = make_rational(static_cast<std::int64_t>(rng.between(1, 12)), static_cast<std::int64_t>(rng.between(1, 4)));
  if (rng.coin()) q = -q;
  return q;
}

std::vector<BoundReport> duality_cell(std::uint64_t seed, std::size_t trials) {
  Rng rng(seed);
  std::uint64_t agree = 0, on_curve = 0;
  for (std::size_t i = 0; i < trials; ++i) {
    Rational a = random_param(rng), b = random_param(rng), y, yp;
    switch (rng.below(4)) {
      case 0:
        y = b, yp = a;
        break;
      case 1:
        y = -a, yp = -b;
        break;
      case 2:
        b = a;
        y = random_param(rng);
        yp = -a - y;
        if (sgn(yp) == 0) yp = y;
        break;
      default:
        y = random_param(rng), yp = random_param(rng);
    }
    const bool lhs = CurveParams(a, b).contains(y, yp);
    const bool rhs = CurveParams(y, yp).contains(a, b);
    if (lhs) ++on_curve;
    if (lhs == rhs) ++agree;
  }
  BoundReport r = exact_record("real", "duality", 0, "on_curve=" + std::to_string(on_curve), agree, trials,
                               agree == trials, seed);
  return {r};
}

std::vector<BoundReport> pp73_cell(std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t na = rng.between(1, 10), nb = rng.between(1, 10);
  const std::uint64_t sa = rng.next(), sb = rng.next();
  const RealSet a = RealSet::random(na, sa), b = RealSet::random(nb, sb);
  Pp73Report rep = pp73_check(a, b);
  rep.report.family = "random(" + std::to_string(na) + "," + std::to_string(sa) + ");random(" +
                      std::to_string(nb) + "," + std::to_string(sb) + ")";
  rep.report.seed = seed;
  return {rep.report};
}

std::vector<Task> real_tasks(const RunConfig& cfg) {
  std::vector<Task> tasks;
  const std::string& action = cfg.action;
  auto seed_of = [&cfg](std::uint64_t j) { return mix_seed(mix_seed(cfg.seed, 0x5ea1), j); };
  if (action == "energy") {
    const std::size_t n = trials_or(cfg, 1000);
    for (std::size_t j = 0; j < n; ++j) {
      tasks.push_back([seed = seed_of(j)] { return energy_cell(random_real(seed, 1, 32)); });
    }
  } else if (action == "pp71") {
    const Rational k = parse_k(cfg.k);
    const std::size_t n = trials_or(cfg, 200);
    for (std::size_t j = 0; j < n; ++j) {
      tasks.push_back([seed = seed_of(j), k] { return pp71_cell(random_real(seed, 3, 24), k); });
    }
    tasks.push_back([k, s = cfg.seed] { return pp71_cell({RealSet::interval(1, 8), "interval(1,8)", s}, k); });
    tasks.push_back([k, s = cfg.seed] {
      return pp71_cell({RealSet::geometric(make_rational(1), make_rational(2), 8), "geometric(1,2,8)", s}, k);
    });
  } else if (action == "pp73") {
    const std::size_t n = trials_or(cfg, 100);
    for (std::size_t j = 0; j < n; ++j) tasks.push_back([seed = seed_of(j)] { return pp73_cell(seed); });
  } else if (action == "curves") {
    if (cfg.max_param < 2 || cfg.max_param > 64) throw UsageError("--max-param must lie in [2, 64]");
    for (std::uint32_t a = 1; a <= cfg.max_param; ++a) {
      for (std::uint32_t b = 1; b <= cfg.max_param; ++b) {
        if (a != b) tasks.push_back([a, b, m = cfg.max_param] { return curves_cell(a, b, m); });
      }
    }
    tasks.push_back([seed = seed_of(0), n = trials_or(cfg, 1000)] { return duality_cell(seed, n); });
  } else {
    throw UsageError("real needs one of energy, pp71, pp73, curves");
  }
  return tasks;
}

const std::vector<std::string> kBoundsActions{"t1", "t2", "t3", "nnn1", "corollaries", "growth", "shifted"};

std::vector<BoundReport> sweep_summary(const std::vector<BoundReport>& all) {
  struct Acc {
    std::uint64_t count = 0, failures = 0;
    double min_ratio = std::numeric_limits<double>::infinity();
    bool hard = false;
  };
  std::map<std::string, Acc> acc;
  for (const auto& r : all) {
    auto& a = acc[r.theorem_id];
    ++a.count;
    if (std::isfinite(r.ratio)) a.min_ratio = std::min(a.min_ratio, r.ratio);
    if (r.holds) {
      a.hard = true;
      if (!*r.holds) ++a.failures;
    }
  }
  std::vector<BoundReport> out;
  for (const auto& [id, a] : acc) {
    BoundReport r = record("sweep", id, 0, "min_ratio", a.count, 0, std::nullopt, 0);
    r.rhs = static_cast<double>(a.failures);
    r.ratio = a.min_ratio;
    if (a.hard) r.holds = a.failures == 0;
    out.push_back(r);
  }
  return out;
}

}  // namespace

std::vector<BoundReport> run_cells(std::size_t cells, std::size_t jobs,
                                   const std::function<std::vector<BoundReport>(std::size_t)>& fn) {
  std::vector<std::vector<BoundReport>> results(cells);
  std::vector<std::exception_ptr> errors(cells);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells; i = next++) {
      try {
        results[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min(jobs, cells));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<BoundReport> out;
  for (auto& r : results) std::move(r.begin(), r.end(), std::back_inserter(out));
  return out;
}

std::vector<BoundReport> run_suite(const RunConfig& cfg) {
  if (cfg.tables != "id" && cfg.tables != "random") throw UsageError("--tables must be id or random");
  std::vector<Task> tasks;
  if (cfg.command == "graph") {
    tasks = graph_tasks(cfg);
  } else if (cfg.command == "spectral") {
    tasks = spectral_tasks(cfg);
  } else if (cfg.command == "bounds") {
    if (std::find(kBoundsActions.begin(), kBoundsActions.end(), cfg.action) == kBoundsActions.end()) {
      throw UsageError("unknown bounds suite '" + cfg.action + "'");
    }
    tasks = bounds_tasks(cfg, cfg.action);
  } else if (cfg.command == "real") {
    tasks = real_tasks(cfg);
  } else if (cfg.command == "sweep") {
    for (const auto& a : kBoundsActions) {
      auto more = bounds_tasks(cfg, a);
      std::move(more.begin(), more.end(), std::back_inserter(tasks));
    }
  } else {
    throw UsageError("unknown command '" + cfg.command + "'");
  }
  auto reports = run_cells(tasks.size(), cfg.jobs, [&](std::size_t i) { return tasks[i](); });
  if (cfg.command == "sweep") {
    auto summary = sweep_summary(reports);
    std::move(summary.begin(), summary.end(), std::back_inserter(reports));
  }
  sort_reports(reports);
  return reports;
}

}  // namespace expanderlab::cli
