#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "expanderlab/int_matrix.hpp"
#include "expanderlab/spgraph.hpp"

namespace expanderlab {

enum class EigenMethod { automatic, dense, deflated_power };

std::string to_string(EigenMethod m);

struct SpectralOptions {
  EigenMethod method = EigenMethod::automatic;
  /// Largest n solved densely under EigenMethod::automatic.
  std::size_t dense_limit = 1024;
  std::size_t max_iterations = 100000;
  /// Convergence threshold on the Rayleigh-quotient change (relative).
  double tolerance = 1e-10;
  /// Residual target ||Nv - theta v|| / ||v||, relative to theta1.
  double residual_tolerance = 1e-8;
  std::uint64_t seed = 0x5eed;
};

/// Top two eigenvalues (with multiplicity) of a symmetric PSD matrix.
struct SpectralReport {
  double theta1 = 0;
  double theta2 = 0;
  double residual1 = 0;
  double residual2 = 0;
  EigenMethod method = EigenMethod::dense;
  std::size_t iterations = 0;
  /// Unit eigenvector for theta2.
  std::vector<double> eigenvector2;
};

/// Full symmetric eigendecomposition by cyclic Jacobi rotations.
struct JacobiResult {
  std::vector<double> eigenvalues;  // decreasing
  std::vector<double> eigenvectors; // column j (row-major n x n) pairs with eigenvalues[j]
  std::size_t sweeps = 0;
};
JacobiResult jacobi_eigen(const IntMatrix& m, std::size_t max_sweeps = 100);

/// Symmetric linear operator y = N x.
using SymmetricOperator = std::function<void(std::span<const double>, std::span<double>)>;

/// Deflated power iteration: theta1 from the full operator, theta2 on the
/// orthogonal complement of theta1's eigenvector. When `regular` is set the
/// top eigenvector is taken to be the all-ones vector exactly.
SpectralReport deflated_power(const SymmetricOperator& op, std::size_t n, bool regular,
                              const SpectralOptions& opts = {});

/// Throws DomainError for a non-symmetric input, ConvergenceError when the
/// iteration cap is hit.
SpectralReport eigs_top2(const GramMatrix& n, const SpectralOptions& opts = {});
/// Same spectrum computed through the graph's adjacency lists (M M^T).
SpectralReport eigs_top2(const SumProductGraph& graph, const SpectralOptions& opts = {});

struct PerronCheck {
  bool holds = false;
  bool regular = false;
  std::int64_t row_sum = 0;
  /// Largest eigenvalue on the complement of the all-ones vector.
  double complement_top = 0;
};

/// Row sums checked exactly; then the top eigenvalue restricted to 1^perp is
/// compared against the row sum s. holds iff N 1 = s 1 and that value is
/// strictly below s.
PerronCheck verify_perron(const GramMatrix& n, const SpectralOptions& opts = {});

/// |v^T E v| <= d_E ||v||^2 for a simple d_E-regular matrix E.
/// DomainError when E is not 0/1 or not regular.
bool quad_form_bound(const IntMatrix& e, std::span<const double> v);

struct DiscrepancyRecord {
  std::size_t size_s = 0;
  std::size_t size_t = 0;
  std::uint64_t e_st = 0;
  double lhs = 0;  // |e(S,T) n - |S||T| d|
  double rhs = 0;  // n sqrt(theta2 |S||T|)
  bool holds = false;
};

/// Evaluates |e(S,T) n - |S||T| d| <= n sqrt(theta2 |S||T|) using
/// theta2 + residual2 from the report, so the check errs on the safe side.
DiscrepancyRecord discrepancy_check(const SumProductGraph& graph, const VertexSet& s,
                                    const VertexSet& t, const SpectralReport& report);

}  // namespace expanderlab
