#include "unitary/smith.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <utility>

#include "unitary/errors.hpp"

namespace unitary {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols,
                             const std::vector<std::int64_t>& row_major)
    : rows_(rows), cols_(cols), data_(row_major.begin(), row_major.end()) {
  if (row_major.size() != rows * cols) throw DomainError("matrix data does not match its shape");
}

bool IntegerMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const BigInt& x) { return x == 0; });
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix shapes do not compose");
  IntegerMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigInt& x = a.at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out.at(i, j) += x * b.at(k, j);
    }
  }
  return out;
}

namespace {

__extension__ using i128 = __int128;

struct Overflow {};

// Arithmetic policies: 64-bit with overflow detection, and exact.
struct Checked64 {
  using T = std::int64_t;
  static T from(const BigInt& x) {
    if (x > std::numeric_limits<T>::max() || x < -std::numeric_limits<T>::max()) throw Overflow{};
    return static_cast<T>(x);
  }
  static BigInt to_big(T x) { return BigInt(x); }
  static T abs(T x) { return x < 0 ? -x : x; }
  static T mul_sub(T a, T q, T b) {  // a - q * b
    T prod = 0;
    T out = 0;
    if (__builtin_mul_overflow(q, b, &prod) || __builtin_sub_overflow(a, prod, &out) ||
        out == std::numeric_limits<T>::min()) {
      throw Overflow{};
    }
    return out;
  }
  static T add(T a, T b) {
    T out = 0;
    if (__builtin_add_overflow(a, b, &out) || out == std::numeric_limits<T>::min()) throw Overflow{};
    return out;
  }
};

struct Exact {
  using T = BigInt;
  static T from(const BigInt& x) { return x; }
  static BigInt to_big(const T& x) { return x; }
  static T abs(const T& x) { return x < 0 ? T(-x) : x; }
  static T mul_sub(const T& a, const T& q, const T& b) { return a - q * b; }
  static T add(const T& a, const T& b) { return a + b; }
};

template <class P>
SmithForm smith_impl(const IntegerMatrix& input) {
  using T = typename P::T;
  const std::size_t rows = input.rows();
  const std::size_t cols = input.cols();
  std::vector<T> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a[i * cols + j] = P::from(input.at(i, j));
  }
  auto at = [&](std::size_t i, std::size_t j) -> T& { return a[i * cols + j]; };

  auto swap_rows = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t j = 0; j < cols; ++j) std::swap(at(x, j), at(y, j));
  };
  auto swap_cols = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t i = 0; i < rows; ++i) std::swap(at(i, x), at(i, y));
  };

  SmithForm out;
  const std::size_t diag = std::min(rows, cols);
  for (std::size_t t = 0; t < diag; ++t) {
    for (;;) {
      // Least nonzero |entry| in the trailing block becomes the pivot.
      std::optional<std::pair<std::size_t, std::size_t>> best;
      T best_abs{};
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (at(i, j) == 0) continue;
          const T v = P::abs(at(i, j));
          if (!best || v < best_abs) {
            best = {i, j};
            best_abs = v;
            if (v == 1) break;
          }
        }
        if (best && best_abs == 1) break;
      }
      if (!best) {
        out.rank = out.invariant_factors.size();
        return out;
      }
      swap_rows(t, best->first);
      swap_cols(t, best->second);
      const T pivot = at(t, t);

      bool residue = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (at(i, t) == 0) continue;
        const T q = at(i, t) / pivot;
        for (std::size_t j = t; j < cols; ++j) {
          if (at(t, j) != 0) at(i, j) = P::mul_sub(at(i, j), q, at(t, j));
        }
        if (at(i, t) != 0) residue = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (at(t, j) == 0) continue;
        const T q = at(t, j) / pivot;
        for (std::size_t i = t; i < rows; ++i) {
          if (at(i, t) != 0) at(i, j) = P::mul_sub(at(i, j), q, at(i, t));
        }
        if (at(t, j) != 0) residue = true;
      }
      if (residue) continue;

      // Pivot row and column are clear; enforce divisibility on the block.
      std::optional<std::size_t> offender;
      for (std::size_t i = t + 1; i < rows && !offender; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (at(i, j) % pivot != 0) {
            offender = i;
            break;
          }
        }
      }
      if (!offender) break;
      for (std::size_t j = t; j < cols; ++j) at(t, j) = P::add(at(t, j), at(*offender, j));
    }
    out.invariant_factors.push_back(P::to_big(P::abs(at(t, t))));
  }
  out.rank = out.invariant_factors.size();
  return out;
}

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& m) {
  try {
    return smith_impl<Checked64>(m);
  } catch (const Overflow&) {
    return smith_impl<Exact>(m);
  }
}

std::size_t rational_rank(std::vector<std::int64_t> a, std::size_t rows, std::size_t cols) {
  if (a.size() != rows * cols) throw DomainError("matrix data does not match its shape");
  const std::vector<std::int64_t> original = a;
  auto at = [&](std::size_t i, std::size_t j) -> std::int64_t& { return a[i * cols + j]; };
  std::size_t rank = 0;
  std::int64_t previous = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && at(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));
    }
    const std::int64_t p = at(rank, c);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const std::int64_t factor = at(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        // Bareiss step; the division by the previous pivot is exact.
        const i128 v =
            (static_cast<i128>(at(i, j)) * p - static_cast<i128>(factor) * at(rank, j)) / previous;
        if (v > std::numeric_limits<std::int64_t>::max() ||
            v < std::numeric_limits<std::int64_t>::min()) {
          return smith_normal_form(IntegerMatrix(rows, cols, original)).rank;
        }
        at(i, j) = static_cast<std::int64_t>(v);
      }
    }
    previous = p;
    ++rank;
  }
  return rank;
}

}  // namespace unitary
