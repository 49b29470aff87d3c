#pragma once

// The truncated algebra A_[n]: functions on {1..n} under unitary convolution.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "unitary/arith.hpp"
#include "unitary/numeric.hpp"

namespace unitary {

/// Sparse element of A_[n]. Keys lie in [1, n]; zero coefficients are never
/// stored, so two functions are equal iff their term maps are.
class TruncatedFunction {
 public:
  explicit TruncatedFunction(std::uint64_t n);

  /// The basis element e_k.
  static TruncatedFunction basis(std::uint64_t n, std::uint64_t k);

  std::uint64_t n() const { return n_; }
  Rational coefficient(std::uint64_t k) const;
  void set(std::uint64_t k, const Rational& value);
  void add(std::uint64_t k, const Rational& value);
  const std::map<std::uint64_t, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  TruncatedFunction& operator+=(const TruncatedFunction& other);
  friend TruncatedFunction operator+(TruncatedFunction a, const TruncatedFunction& b) {
    return a += b;
  }
  friend TruncatedFunction operator*(const Rational& s, const TruncatedFunction& f);
  friend bool operator==(const TruncatedFunction&, const TruncatedFunction&) = default;

 private:
  void check_index(std::uint64_t k) const;

  std::uint64_t n_;
  std::map<std::uint64_t, Rational> terms_;
};

/// (f (+) g)(k) = sum over d*m = k, gcd(d, m) = 1, k <= n of f(d) g(m).
TruncatedFunction convolve(const TruncatedFunction& f, const TruncatedFunction& g);

/// k in (1, n] with k*p > n for every prime p coprime to k.
std::vector<std::uint64_t> socle_basis(const Sieve& sieve, std::uint64_t n);
std::uint64_t socle_dimension(const Sieve& sieve, std::uint64_t n);

/// Monomial multiplicative syzygies: lattice points (i, j), 1 < i, j <= n,
/// with ij > n or gcd(i, j) > 1. Membership is a predicate; the set is only
/// materialised on request since it has ~n^2 points.
class SyzygySet {
 public:
  explicit SyzygySet(std::uint64_t n);

  std::uint64_t n() const { return n_; }
  bool contains(std::uint64_t i, std::uint64_t j) const;
  /// |M([n])|, counted through the complement (coprime pairs with ij <= n).
  std::uint64_t size() const;
  /// All points in row-major order; throws CapExceeded above max_points.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> points(
      std::uint64_t max_points = 10'000'000) const;

 private:
  std::uint64_t n_;
};

SyzygySet monomial_syzygies(std::uint64_t n);
/// dim K_2([n]) = (n-1)^2 - (n-1).
std::uint64_t k2_dimension(std::uint64_t n);

/// 1 - 1/2 + sum_{i <= terms} (1/p_i - 1/p_{i+1}) / (p_1 ... p_i), exactly.
Rational socle_density_series(const Sieve& sieve, std::size_t terms);

/// dim Socle(A_[n]) / n by exact counting.
double socle_density_empirical(const Sieve& sieve, std::uint64_t n);

/// Interval-decomposition estimate n/2 + sum_k (n/p_k - n/p_{k+1}) / p_1...p_k
/// of the socle dimension. Diagnostic only; its error is below pi(n).
double socle_interval_estimate(const Sieve& sieve, std::uint64_t n);

bool is_gorenstein(const Sieve& sieve, std::uint64_t n);

}  // namespace unitary
