#include "expanderlab/spgraph.hpp"

#include <algorithm>
#include <cmath>

#include "expanderlab/errors.hpp"

namespace expanderlab {

// --- IntMatrix ----------------------------------------------------------------

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::ones(std::size_t n) { return IntMatrix(n, 1); }

bool IntMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

std::vector<std::int64_t> IntMatrix::row_sums() const {
  std::vector<std::int64_t> out(n_, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    for (auto x : row(i)) out[i] += x;
  }
  return out;
}

std::vector<std::int64_t> IntMatrix::column_sums() const {
  std::vector<std::int64_t> out(n_, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    const auto r = row(i);
    for (std::size_t j = 0; j < n_; ++j) out[j] += r[j];
  }
  return out;
}

// --- rules ----------------------------------------------------------------------

namespace {

void require_full(const FuncTable& t, const char* what) {
  if (!t.domain().is_saturated()) {
    throw DomainError(std::string(what) + " must be defined on all of F_p^*");
  }
}

}  // namespace

EdgeRule::EdgeRule(FnForm f) : form_(std::move(f)) {
  if (const auto* g = std::get_if<FnForm::General>(&form_.variant())) {
    require_full(g->g, "g");
    require_full(g->h, "h");
    if (g->g_prime) require_full(*g->g_prime, "g'");
  } else if (!std::holds_alternative<FnForm::Power>(form_.variant())) {
    throw DomainError("edge rules take general or power forms only");
  }
}

EdgeRule EdgeRule::standard(FuncTable g, std::optional<FuncTable> g_prime) {
  auto id = FuncTable::identity(g.domain());
  return EdgeRule(FnForm::general(std::move(g), std::move(id), std::move(g_prime)));
}

EdgeRule EdgeRule::sum_product(PrimeModulus p) {
  const auto units = FpSet::multiplicative_group(p);
  return EdgeRule(FnForm::general(FuncTable::constant(units, 1), FuncTable::identity(units)));
}

VertexSet VertexSet::all(std::size_t universe) {
  VertexSet s(universe);
  for (std::size_t v = 0; v < universe; ++v) s.insert(v);
  return s;
}

std::vector<std::size_t> VertexSet::members() const {
  std::vector<std::size_t> out;
  out.reserve(count_);
  for (std::size_t v = 0; v < mask_.size(); ++v) {
    if (mask_[v] != 0) out.push_back(v);
  }
  return out;
}

// --- graph ----------------------------------------------------------------------

SumProductGraph SumProductGraph::build(const EdgeRule& rule) {
  SumProductGraph g(rule);
  const PrimeModulus p = rule.modulus();
  const Residue q = p.group_order();
  g.n_ = static_cast<std::size_t>(q) * q;

  // F(b, d) as a lookup table; 0 means no edge for that (b, d).
  std::vector<Residue> table(g.n_);
  for (Residue b = 1; b <= q; ++b) {
    for (Residue d = 1; d <= q; ++d) table[(b - 1) * q + (d - 1)] = rule(b, d);
  }
  std::vector<Residue> inverse(p.value(), 0);
  for (Residue a = 1; a <= q; ++a) inverse[a] = p.inv(a);

  g.out_offsets_.assign(g.n_ + 1, 0);
  std::vector<std::size_t> in_deg(g.n_, 0);
  for (Residue a = 1; a <= q; ++a) {
    const Residue ainv = inverse[a];
    for (Residue b = 1; b <= q; ++b) {
      const std::size_t u = g.index(a, b);
      for (Residue d = 1; d <= q; ++d) {
        const Residue f = table[(b - 1) * q + (d - 1)];
        if (f == 0) continue;
        const std::size_t w = g.index(p.mul(f, ainv), d);
        g.out_targets_.push_back(static_cast<std::uint32_t>(w));
        ++in_deg[w];
      }
      g.out_offsets_[u + 1] = g.out_targets_.size();
    }
  }

  g.in_offsets_.assign(g.n_ + 1, 0);
  for (std::size_t v = 0; v < g.n_; ++v) g.in_offsets_[v + 1] = g.in_offsets_[v] + in_deg[v];
  g.in_sources_.resize(g.out_targets_.size());
  std::vector<std::size_t> fill(g.in_offsets_.begin(), g.in_offsets_.end() - 1);
  for (std::size_t u = 0; u < g.n_; ++u) {
    for (auto w : g.out_neighbors(u)) g.in_sources_[fill[w]++] = static_cast<std::uint32_t>(u);
  }

  const std::size_t d = g.out_offsets_[1];
  for (std::size_t v = 0; v < g.n_; ++v) {
    const std::size_t out = g.out_offsets_[v + 1] - g.out_offsets_[v];
    if (out != d || in_deg[v] != d) {
      const auto [a, b] = g.vertex(v);
      throw RuleViolation("rule " + rule.form().name() + " is not regular at vertex (" +
                          std::to_string(a) + "," + std::to_string(b) + "): out " +
                          std::to_string(out) + ", in " + std::to_string(in_deg[v]) +
                          ", expected " + std::to_string(d));
    }
  }
  g.degree_ = static_cast<std::uint32_t>(d);
  return g;
}

std::uint64_t count_solutions(FpElem a, FpElem b, FpElem c, FpElem d, const FuncTable& g,
                              const std::optional<FuncTable>& g_prime) {
  const PrimeModulus p = a.modulus();
  if (!(b.modulus() == p && c.modulus() == p && d.modulus() == p && g.modulus() == p)) {
    throw DomainError("modulus mismatch");
  }
  const Residue gb = g(b.value()), gd = g(d.value());
  std::uint64_t count = 0;
  for (Residue y = 1; y < p.value(); ++y) {
    const Residue gp = g_prime ? (*g_prime)(y) : 1;
    const Residue lhs1 = p.mul(p.mul(gb, gp), p.add(b.value(), y));
    const Residue lhs2 = p.mul(p.mul(gd, gp), p.add(d.value(), y));
    for (Residue x = 1; x < p.value(); ++x) {
      if (p.mul(a.value(), x) == lhs1 && p.mul(c.value(), x) == lhs2) ++count;
    }
  }
  return count;
}

GramMatrix gram(const SumProductGraph& graph) {
  const std::size_t n = graph.vertex_count();
  GramMatrix out(n);
  // Each vertex w contributes 1 to every ordered pair of its in-neighbours.
  for (std::size_t w = 0; w < n; ++w) {
    const auto src = graph.in_neighbors(w);
    for (auto u : src) {
      auto row = out.row(u);
      for (auto v : src) ++row[v];
    }
  }
  return out;
}

void gram_apply(const SumProductGraph& graph, std::span<const double> in, std::span<double> out) {
  const std::size_t n = graph.vertex_count();
  if (in.size() != n || out.size() != n) throw DomainError("gram_apply: size mismatch");
  std::vector<double> mid(n, 0.0);
  for (std::size_t w = 0; w < n; ++w) {
    double s = 0.0;
    for (auto u : graph.in_neighbors(w)) s += in[u];
    mid[w] = s;
  }
  for (std::size_t u = 0; u < n; ++u) {
    double s = 0.0;
    for (auto w : graph.out_neighbors(u)) s += mid[w];
    out[u] = s;
  }
}

ErrorMatrixReport decompose_gram(const GramMatrix& g) {
  ErrorMatrixReport rep;
  const std::size_t n = g.size();
  const auto q = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
  if (q * q != n || !is_prime(q + 1) || q + 1 < PrimeModulus::kMin) {
    throw DomainError("matrix size " + std::to_string(n) + " is not (p-1)^2 for a prime p >= 5");
  }
  const auto p = static_cast<std::int32_t>(q + 1);
  rep.p = static_cast<std::uint32_t>(p);
  rep.expected_degree = static_cast<std::uint32_t>(3 * p - 6);
  rep.error = IntMatrix(n);

  auto fail = [&](std::string why, std::size_t i, std::size_t j) {
    if (rep.failure.empty()) {
      rep.failure = std::move(why);
      rep.offending = std::make_pair(i, j);
    }
  };

  rep.census_ok = true;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t big = 0, zeros = 0, ones = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const std::int32_t gij = g(i, j);
      if (gij == p - 2) ++big;
      if (gij == 0) ++zeros;
      if (gij == 1) ++ones;
      const std::int32_t e = 1 + (i == j ? p - 3 : 0) - gij;
      rep.error(i, j) = e;
      if (e != 0 && e != 1) fail("E entry " + std::to_string(e) + " is not 0/1", i, j);
    }
    if (big != 1 || zeros != static_cast<std::size_t>(3 * p - 6) ||
        ones != n - static_cast<std::size_t>(3 * p - 6) - 1) {
      rep.census_ok = false;
      fail("row census: " + std::to_string(big) + " entries p-2, " + std::to_string(zeros) +
               " zeros, " + std::to_string(ones) + " ones",
           i, i);
    }
  }
  for (std::size_t i = 0; i < n && rep.failure.empty(); ++i) {
    if (rep.error(i, i) != 0) fail("E has a nonzero diagonal entry", i, i);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rep.error(i, j) != rep.error(j, i)) {
        fail("E is not symmetric", i, j);
        break;
      }
    }
  }
  const auto rows = rep.error.row_sums();
  const auto cols = rep.error.column_sums();
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i] != 3 * p - 6) fail("E row sum " + std::to_string(rows[i]), i, i);
    if (cols[i] != 3 * p - 6) fail("E column sum " + std::to_string(cols[i]), i, i);
  }
  rep.ok = rep.failure.empty();
  return rep;
}

bool connectivity(const GramMatrix& g) {
  const std::size_t n = g.size();
  const std::size_t words = (n + 63) / 64;
  std::vector<std::uint64_t> rows(n * words, 0), cols(n * words, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (g(i, j) > 0) {
        rows[i * words + j / 64] |= std::uint64_t{1} << (j % 64);
        cols[j * words + i / 64] |= std::uint64_t{1} << (i % 64);
      }
    }
  }
  // (G^2)_{ij} > 0 iff row i and column j share a positive index.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      bool hit = false;
      for (std::size_t w = 0; w < words && !hit; ++w) {
        hit = (rows[i * words + w] & cols[j * words + w]) != 0;
      }
      if (!hit) return false;
    }
  }
  return true;
}

std::uint64_t edge_count(const SumProductGraph& graph, const VertexSet& s, const VertexSet& t) {
  if (s.universe() != graph.vertex_count() || t.universe() != graph.vertex_count()) {
    throw DomainError("vertex set universe does not match the graph");
  }
  std::uint64_t count = 0;
  for (auto u : s.members()) {
    for (auto w : graph.out_neighbors(u)) count += t.contains(w) ? 1 : 0;
  }
  return count;
}

void dump_gram(const GramMatrix& g, std::ostream& os) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (g(i, j) != 0) os << i << ' ' << j << ' ' << g(i, j) << '\n';
    }
  }
}

}  // namespace expanderlab
