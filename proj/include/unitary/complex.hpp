#pragma once

// The simplicial complex on the prime powers <= n whose faces are the sets
// of pairwise coprime prime powers with product <= n. A face is stored as
// its product, so the faces of the full complex are exactly 1..n.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "unitary/arith.hpp"
#include "unitary/numeric.hpp"
#include "unitary/polynomial.hpp"

namespace unitary {

class SimplicialComplex {
 public:
  /// The full complex on all prime powers <= n.
  static SimplicialComplex build(std::shared_ptr<const Sieve> sieve, std::uint64_t n);

  /// The subcomplex of faces whose vertices all lie in `subset`. Vertices of
  /// `subset` outside this complex are rejected.
  SimplicialComplex induced(const std::vector<std::uint64_t>& subset) const;

  std::uint64_t n() const { return n_; }
  const Sieve& sieve() const { return *sieve_; }
  const std::shared_ptr<const Sieve>& sieve_ptr() const { return sieve_; }
  /// Ascending prime-power values.
  const std::vector<std::uint64_t>& vertices() const { return vertices_; }
  /// Ascending products; 1 is the empty face.
  const std::vector<std::uint64_t>& faces() const { return faces_; }
  /// Ascending products of the inclusion-maximal faces.
  const std::vector<std::uint64_t>& facets() const { return facets_; }
  /// Largest face size minus one; -1 when only the empty face exists.
  int dimension() const { return dimension_; }

  bool contains(std::uint64_t face) const;
  /// Ascending vertex values of a face.
  std::vector<std::uint64_t> vertex_set(std::uint64_t face) const;
  /// faces_by_size()[s] lists the faces with s vertices, ascending.
  std::vector<std::vector<std::uint64_t>> faces_by_size() const;

 private:
  SimplicialComplex(std::shared_ptr<const Sieve> sieve, std::uint64_t n,
                    std::vector<std::uint64_t> vertices);

  std::shared_ptr<const Sieve> sieve_;
  std::uint64_t n_ = 0;
  std::vector<std::uint64_t> vertices_;
  std::vector<std::uint64_t> faces_;
  std::vector<std::uint64_t> facets_;
  int dimension_ = -1;
};

/// f = (f_{-1}, f_0, ..., f_{d-1}), h = (h_0, ..., h_d) with d = dim + 1.
struct FHVectors {
  std::vector<std::int64_t> f;
  std::vector<std::int64_t> h;
};

/// h_k = sum_{i<=k} (-1)^{k-i} C(d-i, k-i) f_{i-1}.
std::vector<std::int64_t> h_from_f(const std::vector<std::int64_t>& f);
/// f_{i-1} = sum_{k<=i} C(d-k, i-k) h_k.
std::vector<std::int64_t> f_from_h(const std::vector<std::int64_t>& h);

FHVectors f_h_vectors(const SimplicialComplex& complex);
/// Counts faces of the full complex by omega without building it.
FHVectors f_h_vectors(const Sieve& sieve, std::uint64_t n);

struct Connectivity {
  std::vector<std::uint64_t> isolated;
  /// Every component with more than one vertex; at most one is expected.
  std::vector<std::vector<std::uint64_t>> components;
};

Connectivity connectivity(const SimplicialComplex& complex);

using IntPolynomial = Polynomial<BigInt>;

struct HilbertSeries {
  IntPolynomial artinified;  // sum f_{i-1} t^i
  IntPolynomial numerator;   // sum h_k t^k
  int denominator_exponent = 0;  // d, the power of (1 - t)
};

HilbertSeries hilbert_series(const FHVectors& fh);

/// Artinified series composed with t/(1-t), times (1-t)^d, equals the numerator.
bool froberg_identity_holds(const HilbertSeries& hs);

struct SymmetricMatch {
  int r = 0;
  std::uint64_t n = 0;
  IntPolynomial polynomial;
};

/// How each primorial interval [P_r, p_{r+1} P_{r-1}) was settled.
struct IntervalCertificate {
  int r = 0;
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;  // exclusive
  bool pruned = false;
  /// When pruned: lower bound on the vertex count at lo and the exact count
  /// of integers < hi with r-1 distinct prime factors.
  std::uint64_t vertex_lower_bound = 0;
  std::uint64_t top_face_upper_bound = 0;
};

struct SymmetricScan {
  std::vector<SymmetricMatch> matches;
  std::vector<IntervalCertificate> intervals;
};

/// All n with dim = r - 1 <= r_max - 1 whose artinified Hilbert polynomial is
/// palindromic. An interval is skipped only when the vertex count provably
/// exceeds the number of top-dimension-minus-one faces throughout; otherwise
/// it is scanned in full, which needs the sieve to reach its upper end.
SymmetricScan symmetric_scan(const Sieve& sieve, int r_max);

/// #{ k <= x : omega(k) = s }, by enumeration of prime-power products.
std::uint64_t count_with_omega(const Sieve& sieve, std::uint64_t x, int s);

struct H2Row {
  std::uint64_t n = 0;
  std::int64_t h2 = 0;
  int ell = 0;
  bool strict_local_max = false;
  bool ell_jump = false;  // ell(n) < ell(n + 1)
};

std::vector<H2Row> h2_scan(const Sieve& sieve, std::uint64_t n_min, std::uint64_t n_max);

/// Graphviz rendering of the 1-skeleton.
std::string to_dot(const SimplicialComplex& complex);

}  // namespace unitary
