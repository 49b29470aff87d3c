#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "unitary/complex.hpp"
#include "unitary/errors.hpp"
#include "unitary/ring.hpp"

using namespace unitary;

namespace {

std::shared_ptr<const Sieve> sieve() {
  static const auto s = Sieve::create(2'000'000);
  return s;
}

IntPolynomial poly(std::initializer_list<long> c) {
  std::vector<BigInt> v;
  for (long x : c) v.emplace_back(x);
  return IntPolynomial(std::move(v));
}

}  // namespace

TEST_CASE("the complex at 10") {
  auto c = SimplicialComplex::build(sieve(), 10);
  CHECK(c.vertices() == std::vector<std::uint64_t>{2, 3, 4, 5, 7, 8, 9});
  CHECK(c.dimension() == 1);
  auto by_size = c.faces_by_size();
  REQUIRE(by_size.size() == 3);
  CHECK(by_size[2] == std::vector<std::uint64_t>{6, 10});
  CHECK(c.vertex_set(10) == std::vector<std::uint64_t>{2, 5});
  CHECK(c.facets() == std::vector<std::uint64_t>{4, 6, 7, 8, 9, 10});

  FHVectors fh = f_h_vectors(c);
  CHECK(fh.f == std::vector<std::int64_t>{1, 7, 2});
  CHECK(fh.h == std::vector<std::int64_t>{1, 5, -4});

  HilbertSeries hs = hilbert_series(fh);
  CHECK(hs.artinified == poly({1, 7, 2}));
  CHECK(hs.numerator == poly({1, 5, -4}));
  CHECK(hs.denominator_exponent == 2);
  CHECK(froberg_identity_holds(hs));
  CHECK(hs.numerator.to_string() == "1+5t-4t^2");
}

TEST_CASE("faces are exactly 1..n") {
  for (std::uint64_t n = 1; n <= 300; ++n) {
    auto c = SimplicialComplex::build(sieve(), n);
    REQUIRE(c.faces().size() == n);
    CHECK(c.faces().back() == n);
    CHECK(c.vertices() == oracle::prime_powers_up_to(n));
  }
}

TEST_CASE("facets coincide with the socle basis") {
  for (std::uint64_t n = 2; n <= 500; ++n) {
    CAPTURE(n);
    auto c = SimplicialComplex::build(sieve(), n);
    CHECK(c.facets() == socle_basis(*sieve(), n));
    if (n <= 200) CHECK(c.facets() == oracle::facets(n));
  }
}

TEST_CASE("induced subcomplexes") {
  auto c = SimplicialComplex::build(sieve(), 30);
  auto sub = c.induced({2, 3, 5});
  CHECK(sub.vertices() == std::vector<std::uint64_t>{2, 3, 5});
  CHECK(sub.faces() == std::vector<std::uint64_t>{1, 2, 3, 5, 6, 10, 15, 30});
  CHECK(sub.facets() == std::vector<std::uint64_t>{30});
  auto empty = c.induced({});
  CHECK(empty.dimension() == -1);
  CHECK(empty.faces() == std::vector<std::uint64_t>{1});
  CHECK_THROWS_AS(c.induced({6}), DomainError);
  CHECK_THROWS_AS(c.induced({32}), DomainError);
}

TEST_CASE("f-vector by omega counting matches the built complex") {
  for (std::uint64_t n = 1; n <= 400; n += 3) {
    auto c = SimplicialComplex::build(sieve(), n);
    FHVectors a = f_h_vectors(c), b = f_h_vectors(*sieve(), n);
    CHECK(a.f == b.f);
    CHECK(a.h == b.h);
  }
}

TEST_CASE("h and f vectors invert each other") {
  for (std::uint64_t n = 1; n <= 5000; n += 37) {
    FHVectors fh = f_h_vectors(*sieve(), n);
    CHECK(f_from_h(fh.h) == fh.f);
    CHECK(h_from_f(fh.f) == fh.h);
    std::int64_t fsum = 0;
    for (auto x : fh.f) fsum += x;
    CHECK(fsum == static_cast<std::int64_t>(n));
    // sum h_k = f_{d-1}, the number of top-dimensional faces.
    std::int64_t hsum = 0;
    for (auto x : fh.h) hsum += x;
    CHECK(hsum == fh.f.back());
  }
}

TEST_CASE("Froberg substitution identity up to 500") {
  for (std::uint64_t n = 1; n <= 500; ++n) {
    HilbertSeries hs = hilbert_series(f_h_vectors(*sieve(), n));
    CHECK(froberg_identity_holds(hs));
    // Independent check at a few rational points.
    for (Rational t : {Rational(1, 3), Rational(-2, 5), Rational(7, 11)})
      CHECK(oracle::compose_at(hs.artinified, hs.denominator_exponent, t) ==
            oracle::evaluate(hs.numerator, t));
  }
}

TEST_CASE("Froberg identity rejects a tampered numerator") {
  HilbertSeries hs = hilbert_series(f_h_vectors(*sieve(), 10));
  hs.numerator = poly({1, 5, -3});
  CHECK_FALSE(froberg_identity_holds(hs));
}

TEST_CASE("connectivity at 10 and against union by relaxation") {
  Connectivity cc = connectivity(SimplicialComplex::build(sieve(), 10));
  CHECK(cc.isolated == std::vector<std::uint64_t>{4, 7, 8, 9});
  REQUIRE(cc.components.size() == 1);
  CHECK(cc.components[0] == std::vector<std::uint64_t>{2, 3, 5});
  for (std::uint64_t n = 2; n <= 200; n += 7) {
    Connectivity got = connectivity(SimplicialComplex::build(sieve(), n));
    std::vector<std::uint64_t> isolated;
    std::vector<std::vector<std::uint64_t>> big;
    for (auto& comp : oracle::components(n)) (comp.size() == 1 ? isolated.push_back(comp[0]) : big.push_back(comp));
    CHECK(got.isolated == isolated);
    CHECK(got.components == big);
    CHECK(got.components.size() <= 1);
  }
}

TEST_CASE("count_with_omega against direct counting") {
  for (std::uint64_t x : {1ULL, 10ULL, 210ULL, 1000ULL, 30030ULL}) {
    for (int s = 0; s <= 6; ++s) {
      std::uint64_t brute = 0;
      for (std::uint64_t k = 1; k <= x; ++k) brute += (static_cast<int>(oracle::factor(k).size()) == s);
      CHECK(count_with_omega(*sieve(), x, s) == brute);
    }
  }
  Sieve tiny(100);
  CHECK_THROWS_AS(count_with_omega(tiny, 100'000, 1), SieveLimitError);
}

TEST_CASE("symmetric Hilbert scan up to rank 10") {
  SymmetricScan scan = symmetric_scan(*sieve(), 10);
  REQUIRE(scan.matches.size() == 6);
  const std::uint64_t ns[] = {2, 6, 7, 8, 9, 40};
  const int rs[] = {1, 2, 2, 2, 2, 3};
  const IntPolynomial ps[] = {poly({1, 1}), poly({1, 4, 1}), poly({1, 5, 1}),
                              poly({1, 6, 1}), poly({1, 7, 1}), poly({1, 19, 19, 1})};
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(scan.matches[i].n == ns[i]);
    CHECK(scan.matches[i].r == rs[i]);
    CHECK(scan.matches[i].polynomial == ps[i]);
  }
  // Every pruned interval carries a certificate that actually separates.
  for (const auto& cert : scan.intervals)
    if (cert.pruned) CHECK(cert.vertex_lower_bound > cert.top_face_upper_bound);
}

TEST_CASE("symmetric scan agrees with brute force at small ranks") {
  SymmetricScan scan = symmetric_scan(*sieve(), 4);
  std::vector<std::uint64_t> expected;
  for (std::uint64_t n = 1; n < 2310; ++n) {
    HilbertSeries hs = hilbert_series(f_h_vectors(*sieve(), n));
    if (hs.artinified.is_palindromic() && primorial_rank(n) >= 1) expected.push_back(n);
  }
  std::vector<std::uint64_t> got;
  for (const auto& m : scan.matches) got.push_back(m.n);
  CHECK(got == expected);
}

TEST_CASE("h2 scan around 28..31") {
  auto rows = h2_scan(*sieve(), 27, 31);
  REQUIRE(rows.size() == 5);
  for (const auto& row : rows) CHECK(row.h2 == f_h_vectors(*sieve(), row.n).h.at(2));
  CHECK(rows[1].n == 28);
  CHECK(rows[1].strict_local_max);
  // h2 drops sharply at the primorial 30, so 29 is not a strict local max.
  CHECK(rows[2].n == 29);
  CHECK_FALSE(rows[2].strict_local_max);
  CHECK(rows[2].ell_jump);
  CHECK(rows[2].h2 > rows[3].h2);
  for (const auto& row : rows) CHECK(row.h2 < 0);
}

TEST_CASE("dot output lists every edge once") {
  std::string dot = to_dot(SimplicialComplex::build(sieve(), 10));
  CHECK(dot.find("graph") != std::string::npos);
  CHECK(dot.find("2 -- 3") != std::string::npos);
  CHECK(dot.find("2 -- 5") != std::string::npos);
  CHECK(dot.find("3 -- 5") == std::string::npos);
}
