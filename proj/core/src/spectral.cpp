#include "expanderlab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "expanderlab/errors.hpp"
#include "expanderlab/rng.hpp"

namespace expanderlab {

std::string to_string(EigenMethod m) {
  switch (m) {
    case EigenMethod::automatic: return "automatic";
    case EigenMethod::dense: return "dense";
    case EigenMethod::deflated_power: return "deflated-power";
  }
  return "unknown";
}

JacobiResult jacobi_eigen(const IntMatrix& m, std::size_t max_sweeps) {
  if (!m.is_symmetric()) throw DomainError("jacobi_eigen needs a symmetric matrix");
  const std::size_t n = m.size();
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n * n; ++i) a[i] = m(i / n, i % n);
  // vt holds V transposed so a rotation touches two contiguous rows.
  std::vector<double> vt(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) vt[i * n + i] = 1.0;

  double total = 0.0;
  for (double x : a) total += x * x;
  const double target = 1e-26 * std::max(total, 1e-300);

  JacobiResult res;
  for (; res.sweeps < max_sweeps; ++res.sweeps) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) off += a[i * n + j] * a[i * n + j];
    }
    if (2 * off <= target) break;
    const double skip = std::sqrt(target) / static_cast<double>(n);

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (std::abs(apq) <= skip) continue;
        const double app = a[p * n + p], aqq = a[q * n + q];
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;

        double* rp = &a[p * n];
        double* rq = &a[q * n];
        for (std::size_t k = 0; k < n; ++k) {
          const double x = rp[k], y = rq[k];
          rp[k] = c * x - s * y;
          rq[k] = s * x + c * y;
        }
        // Mirror the updated rows into the columns.
        for (std::size_t k = 0; k < n; ++k) {
          a[k * n + p] = rp[k];
          a[k * n + q] = rq[k];
        }
        rp[p] = app - t * apq;
        rq[q] = aqq + t * apq;
        rp[q] = rq[p] = 0.0;

        double* vp = &vt[p * n];
        double* vq = &vt[q * n];
        for (std::size_t k = 0; k < n; ++k) {
          const double x = vp[k], y = vq[k];
          vp[k] = c * x - s * y;
          vq[k] = s * x + c * y;
        }
      }
    }
  }
  if (res.sweeps == max_sweeps) throw ConvergenceError("Jacobi did not converge");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a[i * n + i] > a[j * n + j]; });
  res.eigenvalues.resize(n);
  res.eigenvectors.assign(n * n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    res.eigenvalues[j] = a[order[j] * n + order[j]];
    for (std::size_t k = 0; k < n; ++k) res.eigenvectors[k * n + j] = vt[order[j] * n + k];
  }
  return res;
}

namespace {

double dot(std::span<const double> x, std::span<const double> y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

double norm(std::span<const double> x) { return std::sqrt(dot(x, x)); }

void normalize(std::span<double> x) {
  const double r = norm(x);
  if (r > 0) {
    for (auto& v : x) v /= r;
  }
}

void project_out(std::span<double> x, std::span<const double> unit) {
  const double c = dot(x, unit);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] -= c * unit[i];
}

double residual(const SymmetricOperator& op, std::span<const double> v, double theta) {
  std::vector<double> y(v.size());
  op(v, y);
  for (std::size_t i = 0; i < v.size(); ++i) y[i] -= theta * v[i];
  const double nv = norm(v);
  return nv > 0 ? norm(y) / nv : 0.0;
}

struct PowerResult {
  double value = 0;
  std::vector<double> vector;
  std::size_t iterations = 0;
};

// Power iteration for the top eigenpair of a PSD operator, optionally
// restricted to the complement of a unit vector.
PowerResult power(const SymmetricOperator& op, std::size_t n, const std::vector<double>* deflate,
                  double scale, const SpectralOptions& opts, std::uint64_t salt) {
  Rng rng(mix_seed(opts.seed, salt));
  PowerResult r;
  r.vector.resize(n);
  for (auto& v : r.vector) v = rng.unit() - 0.5;
  if (deflate) project_out(r.vector, *deflate);
  normalize(r.vector);

  std::vector<double> y(n);
  double prev = -1.0;
  for (r.iterations = 1; r.iterations <= opts.max_iterations; ++r.iterations) {
    op(r.vector, y);
    if (deflate) project_out(y, *deflate);
    r.value = dot(r.vector, y);
    const double ny = norm(y);
    if (ny == 0.0) {
      r.value = 0.0;
      return r;
    }
    for (std::size_t i = 0; i < n; ++i) y[i] /= ny;
    const bool settled =
        prev >= 0 && std::abs(r.value - prev) <= opts.tolerance * std::max(std::abs(r.value), 1.0);
    r.vector.swap(y);
    if (settled) {
      op(r.vector, y);
      if (deflate) project_out(y, *deflate);
      const double theta = dot(r.vector, y);
      for (std::size_t i = 0; i < n; ++i) y[i] -= theta * r.vector[i];
      if (norm(y) <= opts.residual_tolerance * std::max(scale, 1.0)) {
        r.value = theta;
        return r;
      }
    }
    prev = r.value;
  }
  throw ConvergenceError("power iteration hit the cap of " + std::to_string(opts.max_iterations) +
                         " iterations");
}

SymmetricOperator matrix_operator(const IntMatrix& m) {
  return [&m](std::span<const double> in, std::span<double> out) {
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i) {
      const auto row = m.row(i);
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += row[j] * in[j];
      out[i] = s;
    }
  };
}

bool is_regular(const IntMatrix& m) {
  const auto rows = m.row_sums();
  return std::adjacent_find(rows.begin(), rows.end(), std::not_equal_to<>()) == rows.end();
}

SpectralReport dense_report(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n < 2) throw DomainError("need at least a 2x2 matrix");
  const auto jr = jacobi_eigen(m);
  SpectralReport rep;
  rep.method = EigenMethod::dense;
  rep.iterations = jr.sweeps;
  rep.theta1 = jr.eigenvalues[0];
  rep.theta2 = jr.eigenvalues[1];
  std::vector<double> v1(n);
  rep.eigenvector2.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    v1[k] = jr.eigenvectors[k * n];
    rep.eigenvector2[k] = jr.eigenvectors[k * n + 1];
  }
  const auto op = matrix_operator(m);
  rep.residual1 = residual(op, v1, rep.theta1);
  rep.residual2 = residual(op, rep.eigenvector2, rep.theta2);
  return rep;
}

}  // namespace

SpectralReport deflated_power(const SymmetricOperator& op, std::size_t n, bool regular,
                              const SpectralOptions& opts) {
  if (n < 2) throw DomainError("need at least two dimensions");
  SpectralReport rep;
  rep.method = EigenMethod::deflated_power;
  std::vector<double> v1;
  if (regular) {
    v1.assign(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> y(n);
    op(v1, y);
    rep.theta1 = dot(v1, y);
  } else {
    auto top = power(op, n, nullptr, 1.0, opts, 1);
    rep.theta1 = top.value;
    rep.iterations += top.iterations;
    v1 = std::move(top.vector);
  }
  rep.residual1 = residual(op, v1, rep.theta1);
  auto second = power(op, n, &v1, rep.theta1, opts, 2);
  rep.theta2 = second.value;
  rep.iterations += second.iterations;
  rep.eigenvector2 = std::move(second.vector);
  rep.residual2 = residual(op, rep.eigenvector2, rep.theta2);
  return rep;
}

SpectralReport eigs_top2(const GramMatrix& n, const SpectralOptions& opts) {
  if (!n.is_symmetric()) throw DomainError("eigs_top2 needs a symmetric matrix");
  const bool dense = opts.method == EigenMethod::dense ||
                     (opts.method == EigenMethod::automatic && n.size() <= opts.dense_limit);
  if (dense) return dense_report(n);
  return deflated_power(matrix_operator(n), n.size(), is_regular(n), opts);
}

SpectralReport eigs_top2(const SumProductGraph& graph, const SpectralOptions& opts) {
  const std::size_t n = graph.vertex_count();
  const bool dense = opts.method == EigenMethod::dense ||
                     (opts.method == EigenMethod::automatic && n <= opts.dense_limit);
  if (dense) return dense_report(gram(graph));
  const SymmetricOperator op = [&graph](std::span<const double> in, std::span<double> out) {
    gram_apply(graph, in, out);
  };
  // M M^T has constant row sums d^2 for a d-regular graph.
  return deflated_power(op, n, true, opts);
}

PerronCheck verify_perron(const GramMatrix& n, const SpectralOptions& opts) {
  PerronCheck out;
  const auto rows = n.row_sums();
  if (rows.empty()) return out;
  out.row_sum = rows[0];
  out.regular = std::all_of(rows.begin(), rows.end(), [&](auto s) { return s == rows[0]; });
  if (!out.regular || !n.is_symmetric() || n.size() < 2) return out;
  const std::vector<double> ones(n.size(), 1.0 / std::sqrt(static_cast<double>(n.size())));
  auto top = power(matrix_operator(n), n.size(), &ones, static_cast<double>(out.row_sum), opts, 3);
  out.complement_top = top.value;
  const auto s = static_cast<double>(out.row_sum);
  out.holds = out.complement_top < s - 1e-8 * std::max(s, 1.0);
  return out;
}

bool quad_form_bound(const IntMatrix& e, std::span<const double> v) {
  const std::size_t n = e.size();
  if (v.size() != n) throw DomainError("vector length does not match the matrix");
  for (std::size_t i = 0; i < n; ++i) {
    for (auto x : e.row(i)) {
      if (x != 0 && x != 1) throw DomainError("matrix is not 0/1");
    }
  }
  const auto rows = e.row_sums();
  const auto cols = e.column_sums();
  const std::int64_t d = rows.empty() ? 0 : rows[0];
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i] != d || cols[i] != d) throw DomainError("matrix is not regular");
  }
  double q = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = e.row(i);
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += row[j] * v[j];
    q += v[i] * s;
  }
  const double bound = static_cast<double>(d) * dot(v, v);
  return std::abs(q) <= bound * (1.0 + 1e-9);
}

DiscrepancyRecord discrepancy_check(const SumProductGraph& graph, const VertexSet& s,
                                    const VertexSet& t, const SpectralReport& report) {
  DiscrepancyRecord rec;
  rec.size_s = s.size();
  rec.size_t = t.size();
  rec.e_st = edge_count(graph, s, t);
  const auto n = static_cast<std::int64_t>(graph.vertex_count());
  const auto d = static_cast<std::int64_t>(graph.degree());
  const std::int64_t diff = static_cast<std::int64_t>(rec.e_st) * n -
                            static_cast<std::int64_t>(rec.size_s * rec.size_t) * d;
  rec.lhs = static_cast<double>(diff < 0 ? -diff : diff);
  const double theta = std::max(0.0, report.theta2 + report.residual2);
  rec.rhs = static_cast<double>(n) *
            std::sqrt(theta * static_cast<double>(rec.size_s) * static_cast<double>(rec.size_t));
  rec.holds = rec.lhs <= rec.rhs;
  return rec;
}

}  // namespace expanderlab
