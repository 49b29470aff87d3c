#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "unitary/numeric.hpp"

namespace unitary {

/// Dense row-major matrix of arbitrary-precision integers.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntegerMatrix(std::size_t rows, std::size_t cols, const std::vector<std::int64_t>& row_major);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  bool is_zero() const;

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

struct SmithForm {
  std::size_t rank = 0;
  /// Positive nonzero diagonal entries d_1 | d_2 | ... | d_rank.
  std::vector<BigInt> invariant_factors;
};

/// Elimination with a least-|entry| pivot. Runs in checked 64-bit arithmetic
/// and restarts in arbitrary precision if an intermediate would overflow.
SmithForm smith_normal_form(const IntegerMatrix& m);

/// Rank over the rationals of a small row-major integer matrix. Fraction-free
/// elimination in 64 bits, falling back to the Smith form on overflow.
std::size_t rational_rank(std::vector<std::int64_t> row_major, std::size_t rows, std::size_t cols);

}  // namespace unitary
