#pragma once

// Reduced integral homology of the complex and its induced subcomplexes, and
// the Betti-number formulas that are sums over induced subcomplexes.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "unitary/complex.hpp"
#include "unitary/numeric.hpp"
#include "unitary/smith.hpp"

namespace unitary {

/// Augmented boundary map from faces with `size` vertices to faces with
/// size - 1 vertices; rows index the smaller faces. Vertices are ordered by
/// value and the sign of dropping the j-th vertex (0-based) is (-1)^j.
IntegerMatrix boundary_matrix(const SimplicialComplex& complex, std::size_t size);

struct HomologyGroup {
  int degree = -1;
  std::size_t rank = 0;
  std::vector<BigInt> torsion;  // invariant factors > 1
};

struct HomologyProfile {
  /// One entry per degree -1 .. dim.
  std::vector<HomologyGroup> groups;

  std::size_t rank(int degree) const;
  bool torsion_free() const;
  /// Largest degree with a nonzero group, or -2 if every group vanishes.
  int top_degree() const;
  /// sum (-1)^d rank_d.
  std::int64_t euler_characteristic() const;
};

HomologyProfile reduced_homology(const SimplicialComplex& complex);

/// Top degree of nonzero reduced homology of the full complex; -1 when
/// nothing above degree -1 survives.
int homological_degree(std::shared_ptr<const Sieve> sieve, std::uint64_t n);

inline constexpr int kDefaultSubsetCap = 20;

/// Rational homology ranks of every induced subcomplex. Subsets are bit
/// masks over vertices() in ascending order.
class SubsetScan {
 public:
  /// Throws CapExceeded when the vertex count exceeds `cap`.
  static SubsetScan run(std::shared_ptr<const Sieve> sieve, std::uint64_t n,
                        int cap = kDefaultSubsetCap, unsigned threads = 0);

  std::uint64_t n() const { return n_; }
  const std::vector<std::uint64_t>& vertices() const { return vertices_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::uint64_t subset_count() const { return std::uint64_t{1} << vertices_.size(); }
  /// Degrees stored per subset: -1 .. max_degree().
  int max_degree() const { return degrees_ - 2; }
  /// rank of reduced H_degree of the subcomplex induced on `mask`.
  std::uint32_t rank(std::uint64_t mask, int degree) const;
  std::vector<std::uint64_t> subset(std::uint64_t mask) const;

 private:
  std::uint64_t n_ = 0;
  std::vector<std::uint64_t> vertices_;
  int degrees_ = 0;  // stored degrees per subset
  std::vector<std::uint32_t> ranks_;
};

struct BettiEntry {
  int i = 0;
  std::uint64_t mask = 0;
  std::vector<std::uint64_t> subset;
  std::uint64_t value = 0;
};

struct BettiTable {
  std::uint64_t n = 0;
  std::vector<BettiEntry> entries;   // nonzero only, by (i, mask)
  std::vector<std::uint64_t> totals; // coarse beta_i
};

/// beta_{i,U} = rank of reduced H_{|U|-i-1} on the subcomplex induced by U.
BettiTable hochster_betti(const SubsetScan& scan);

/// beta_1 minus the same-column pair count sum C(lambda_i, 2).
std::int64_t mu_c_via_homology(const SubsetScan& scan, const Sieve& sieve);

/// 1 + largest degree of nonzero reduced homology over all induced
/// subcomplexes, the empty one included.
int regularity(const SubsetScan& scan);

struct PoincareSeries {
  std::vector<BigInt> polynomial_ring;  // sum of beta_i t^i; finite
  std::vector<BigInt> square_zero;      // coefficients of t^0 .. t^t_max
};

/// Coarse series: sum over U and d of rank H_d(U) t^{|U|-d-1}, and the same
/// with each term divided by (1 - t)^{|U|}.
PoincareSeries poincare_series(const SubsetScan& scan, int t_max);

/// sum_U sum_d C(d + i, d + 1 + i - |U|) rank H_d(U).
BigInt exterior_betti(const SubsetScan& scan, int i);

}  // namespace unitary
