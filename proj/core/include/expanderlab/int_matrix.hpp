#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace expanderlab {

/// Dense square matrix of 32-bit integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n, std::int32_t fill = 0) : n_(n), data_(n * n, fill) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix ones(std::size_t n);

  std::size_t size() const { return n_; }
  std::int32_t& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  std::int32_t operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  std::span<const std::int32_t> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }
  std::span<std::int32_t> row(std::size_t i) { return {data_.data() + i * n_, n_}; }

  bool is_symmetric() const;
  std::vector<std::int64_t> row_sums() const;
  std::vector<std::int64_t> column_sums() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::int32_t> data_;
};

/// Gram matrices are symmetric nonnegative integer matrices.
using GramMatrix = IntMatrix;

}  // namespace expanderlab
