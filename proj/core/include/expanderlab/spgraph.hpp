#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "expanderlab/field.hpp"
#include "expanderlab/fn_form.hpp"
#include "expanderlab/fp_core.hpp"
#include "expanderlab/int_matrix.hpp"

namespace expanderlab {

/// Edge rule on F_p^* x F_p^*: (a,b) -> (c,d) iff a c = F(b, d).
class EdgeRule {
 public:
  /// F must be a general or power form whose tables cover F_p^*.
  explicit EdgeRule(FnForm f);

  /// a c = g(b) g'(d) (b + d); g' absent means g' = 1.
  static EdgeRule standard(FuncTable g, std::optional<FuncTable> g_prime = std::nullopt);
  /// a c = b + d.
  static EdgeRule sum_product(PrimeModulus p);

  PrimeModulus modulus() const { return form_.modulus(); }
  const FnForm& form() const { return form_; }
  Residue operator()(Residue b, Residue d) const { return form_(b, d); }

 private:
  FnForm form_;
};

/// A subset of the vertex set {0, ..., n-1}.
class VertexSet {
 public:
  explicit VertexSet(std::size_t universe = 0) : mask_(universe, 0) {}
  static VertexSet all(std::size_t universe);

  std::size_t universe() const { return mask_.size(); }
  std::size_t size() const { return count_; }
  bool contains(std::size_t v) const { return mask_[v] != 0; }
  void insert(std::size_t v) {
    if (mask_[v] == 0) {
      mask_[v] = 1;
      ++count_;
    }
  }
  std::vector<std::size_t> members() const;

 private:
  std::vector<std::uint8_t> mask_;
  std::size_t count_ = 0;
};

/// The directed graph of an EdgeRule on (p-1)^2 vertices, indexed
/// (a-1)(p-1) + (b-1). Construction checks that every in- and out-degree
/// equals one common value d and throws RuleViolation otherwise.
class SumProductGraph {
 public:
  static SumProductGraph build(const EdgeRule& rule);

  const EdgeRule& rule() const { return rule_; }
  PrimeModulus modulus() const { return rule_.modulus(); }
  std::size_t vertex_count() const { return n_; }
  std::uint32_t degree() const { return degree_; }

  std::size_t index(Residue a, Residue b) const {
    const std::size_t q = modulus().value() - 1;
    return (a - 1) * q + (b - 1);
  }
  std::pair<Residue, Residue> vertex(std::size_t v) const {
    const std::size_t q = modulus().value() - 1;
    return {static_cast<Residue>(v / q + 1), static_cast<Residue>(v % q + 1)};
  }

  std::span<const std::uint32_t> out_neighbors(std::size_t v) const {
    return {out_targets_.data() + out_offsets_[v], out_offsets_[v + 1] - out_offsets_[v]};
  }
  std::span<const std::uint32_t> in_neighbors(std::size_t v) const {
    return {in_sources_.data() + in_offsets_[v], in_offsets_[v + 1] - in_offsets_[v]};
  }
  std::uint64_t edge_count() const { return out_targets_.size(); }

 private:
  explicit SumProductGraph(EdgeRule rule) : rule_(std::move(rule)) {}

  EdgeRule rule_;
  std::size_t n_ = 0;
  std::uint32_t degree_ = 0;
  std::vector<std::size_t> out_offsets_, in_offsets_;
  std::vector<std::uint32_t> out_targets_, in_sources_;
};

/// Brute-force N(a,b,c,d): the number of (x,y) in (F_p^*)^2 with
///   a x = g(b) g'(y) (b + y)  and  c x = g(d) g'(y) (d + y).
std::uint64_t count_solutions(FpElem a, FpElem b, FpElem c, FpElem d, const FuncTable& g,
                              const std::optional<FuncTable>& g_prime = std::nullopt);

/// Gram matrix of common out-neighbour counts, entry (u,v) = N(u,v). This is
/// M M^T for the adjacency matrix M; it has the same spectrum as M^T M.
GramMatrix gram(const SumProductGraph& graph);

/// out = (M M^T) in, in O(n d) without forming the matrix.
void gram_apply(const SumProductGraph& graph, std::span<const double> in, std::span<double> out);

/// Result of splitting a standard Gram matrix as J + (p-3) I - E.
struct ErrorMatrixReport {
  bool ok = false;
  std::uint32_t p = 0;
  std::uint32_t expected_degree = 0;  // 3p - 6
  IntMatrix error;                    // E
  // Per-row census of the Gram entries: counts of p-2, 0 and 1.
  bool census_ok = false;
  std::string failure;
  std::optional<std::pair<std::size_t, std::size_t>> offending;
};

/// Computes E = J + (p-3) I - G and checks that E is a symmetric 0/1 matrix
/// with zero diagonal and 3p-6 ones in every row and column. p is inferred
/// from n = (p-1)^2.
ErrorMatrixReport decompose_gram(const GramMatrix& g);

/// True iff every entry of G^2 is positive.
bool connectivity(const GramMatrix& g);

/// Number of directed edges from S to T.
std::uint64_t edge_count(const SumProductGraph& graph, const VertexSet& s, const VertexSet& t);

/// Writes "row col value" for each nonzero entry, sorted by (row, col).
void dump_gram(const GramMatrix& g, std::ostream& os);

}  // namespace expanderlab
