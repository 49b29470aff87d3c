#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "unitary/errors.hpp"
#include "unitary/homology.hpp"
#include "unitary/presentation.hpp"
#include "unitary/ring.hpp"

using namespace unitary;

namespace {

std::shared_ptr<const Sieve> sieve() {
  static const auto s = Sieve::create(100'000);
  return s;
}

}  // namespace

TEST_CASE("boundary of a boundary vanishes") {
  for (std::uint64_t n = 1; n <= 60; ++n) {
    auto c = SimplicialComplex::build(sieve(), n);
    for (std::size_t size = 1; size <= static_cast<std::size_t>(c.dimension() + 1); ++size)
      CHECK((boundary_matrix(c, size) * boundary_matrix(c, size + 1)).is_zero());
  }
}

TEST_CASE("boundary shapes and signs") {
  auto c = SimplicialComplex::build(sieve(), 10);
  IntegerMatrix d2 = boundary_matrix(c, 2);
  CHECK(d2.rows() == 7);
  CHECK(d2.cols() == 2);
  // d{2,3} = {3} - {2}; rows are the vertices in ascending order.
  CHECK(d2.at(1, 0) == 1);   // vertex 3
  CHECK(d2.at(0, 0) == -1);  // vertex 2
  IntegerMatrix d1 = boundary_matrix(c, 1);
  CHECK(d1.rows() == 1);
  CHECK(d1.cols() == 7);
}

TEST_CASE("reduced homology at small n") {
  HomologyProfile h1 = reduced_homology(SimplicialComplex::build(sieve(), 1));
  CHECK(h1.rank(-1) == 1);
  CHECK(h1.top_degree() == -1);
  HomologyProfile h2 = reduced_homology(SimplicialComplex::build(sieve(), 2));
  CHECK(h2.top_degree() == -2);
  HomologyProfile h10 = reduced_homology(SimplicialComplex::build(sieve(), 10));
  CHECK(h10.rank(0) == 4);
  CHECK(h10.rank(1) == 0);
  CHECK(h10.top_degree() == 0);
}

TEST_CASE("Euler characteristic and torsion up to 100") {
  for (std::uint64_t n = 1; n <= 100; ++n) {
    CAPTURE(n);
    HomologyProfile h = reduced_homology(SimplicialComplex::build(sieve(), n));
    CHECK(h.torsion_free());
    CHECK(h.euler_characteristic() == oracle::reduced_euler(n));
  }
}

TEST_CASE("homological degree equals v") {
  CHECK(homological_degree(sieve(), 1) == -1);
  CHECK(homological_degree(sieve(), 2) == -1);
  for (std::uint64_t n = 3; n <= 60; ++n) {
    CAPTURE(n);
    CHECK(homological_degree(sieve(), n) == predicted_homological_degree(n));
  }
}

TEST_CASE("subset scan agrees with full homology of induced complexes") {
  SubsetScan scan = SubsetScan::run(sieve(), 20);
  auto full = SimplicialComplex::build(sieve(), 20);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const std::uint64_t mask = rng() % scan.subset_count();
    HomologyProfile h = reduced_homology(full.induced(scan.subset(mask)));
    for (int d = -1; d <= scan.max_degree(); ++d) CHECK(scan.rank(mask, d) == h.rank(d));
  }
}

TEST_CASE("Euler characteristic of random induced subcomplexes") {
  std::mt19937_64 rng(17);
  std::vector<SubsetScan> scans;
  std::vector<SimplicialComplex> fulls;
  for (std::uint64_t n = 2; n <= 30; ++n) {
    scans.push_back(SubsetScan::run(sieve(), n));
    fulls.push_back(SimplicialComplex::build(sieve(), n));
  }
  for (int t = 0; t < 10'000; ++t) {
    const std::size_t which = rng() % scans.size();
    const SubsetScan& scan = scans[which];
    const std::uint64_t mask = rng() % scan.subset_count();
    auto sub = fulls[which].induced(scan.subset(mask));
    // Alternating face count, the empty face in degree -1.
    std::int64_t chi = 0;
    for (std::uint64_t face : sub.faces())
      chi += (sub.vertex_set(face).size() % 2 == 1) ? 1 : -1;
    std::int64_t from_ranks = 0;
    for (int d = -1; d <= scan.max_degree(); ++d)
      from_ranks += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(scan.rank(mask, d));
    REQUIRE(chi == from_ranks);
  }
}

TEST_CASE("subset scan is independent of the thread count") {
  SubsetScan a = SubsetScan::run(sieve(), 24, kDefaultSubsetCap, 1);
  SubsetScan b = SubsetScan::run(sieve(), 24, kDefaultSubsetCap, 3);
  for (std::uint64_t mask = 0; mask < a.subset_count(); ++mask)
    for (int d = -1; d <= a.max_degree(); ++d) REQUIRE(a.rank(mask, d) == b.rank(mask, d));
}

TEST_CASE("subset scan refuses large vertex sets") {
  CHECK_THROWS_AS(SubsetScan::run(sieve(), 30, 10), CapExceeded);
  CHECK_THROWS_AS(SubsetScan::run(sieve(), 1000, 64), CapExceeded);
}

TEST_CASE("first Betti number counts minimal non-faces") {
  for (std::uint64_t n = 2; n <= 30; ++n) {
    CAPTURE(n);
    SubsetScan scan = SubsetScan::run(sieve(), n, 20);
    BettiTable t = hochster_betti(scan);
    const std::uint64_t beta1 = t.totals.size() > 1 ? t.totals[1] : 0;
    const std::uint64_t non_faces =
        oracle::same_column_pairs(n) + oracle::separated_generators(n).size();
    CHECK(beta1 == non_faces);
    MuCounts mu = mu_counts(*sieve(), n);
    CHECK(mu_c_via_homology(scan, *sieve()) == static_cast<std::int64_t>(mu.mu_c));
    CHECK(t.totals[0] == 1);
  }
}

TEST_CASE("Betti table at 10") {
  BettiTable t = hochster_betti(SubsetScan::run(sieve(), 10));
  CHECK(t.totals[1] == 19);
  for (const auto& e : t.entries) CHECK(e.value > 0);
}

TEST_CASE("regularity is 1 + v up to 24") {
  for (std::uint64_t n = 1; n <= 24; ++n) {
    CAPTURE(n);
    CHECK(regularity(SubsetScan::run(sieve(), n)) == 1 + predicted_homological_degree(n));
  }
}

TEST_CASE("Poincare series of tiny complexes") {
  PoincareSeries p2 = poincare_series(SubsetScan::run(sieve(), 2), 5);
  CHECK(p2.polynomial_ring == std::vector<BigInt>{1});
  CHECK(p2.square_zero == std::vector<BigInt>{1, 0, 0, 0, 0, 0});
  // Two isolated vertices: 1 + t / (1 - t)^2.
  PoincareSeries p3 = poincare_series(SubsetScan::run(sieve(), 3), 5);
  CHECK(p3.polynomial_ring == std::vector<BigInt>{1, 1});
  CHECK(p3.square_zero == std::vector<BigInt>{1, 1, 2, 3, 4, 5});
}

TEST_CASE("Poincare series agrees with Betti totals and exterior Betti numbers") {
  for (std::uint64_t n : {5ULL, 10ULL, 16ULL}) {
    SubsetScan scan = SubsetScan::run(sieve(), n);
    PoincareSeries p = poincare_series(scan, 8);
    BettiTable t = hochster_betti(scan);
    std::vector<BigInt> totals(t.totals.begin(), t.totals.end());
    while (!totals.empty() && totals.back() == 0) totals.pop_back();
    CHECK(p.polynomial_ring == totals);
    for (int i = 0; i <= 8; ++i) CHECK(exterior_betti(scan, i) == p.square_zero[i]);
  }
  CHECK(exterior_betti(SubsetScan::run(sieve(), 10), 1) == 19);
}
