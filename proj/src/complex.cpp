#include "unitary/complex.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

#include "unitary/errors.hpp"

namespace unitary {

namespace {

std::int64_t to_int64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw OverflowError("value " + v.str() + " does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::shared_ptr<const Sieve> sieve, std::uint64_t n,
                                     std::vector<std::uint64_t> vertices)
    : sieve_(std::move(sieve)), n_(n), vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());

  // Depth-first over ascending vertices; coprimality keeps faces separated.
  std::function<void(std::size_t, std::uint64_t, int)> grow = [&](std::size_t start,
                                                                   std::uint64_t product,
                                                                   int size) {
    faces_.push_back(product);
    dimension_ = std::max(dimension_, size - 1);
    for (std::size_t i = start; i < vertices_.size(); ++i) {
      const std::uint64_t q = vertices_[i];
      if (q > n_ / product) break;
      if (std::gcd(product, q) != 1) continue;
      grow(i + 1, product * q, size + 1);
    }
  };
  grow(0, 1, 0);
  std::sort(faces_.begin(), faces_.end());

  for (std::uint64_t face : faces_) {
    bool maximal = true;
    for (std::uint64_t q : vertices_) {
      if (q > n_ / face) break;
      if (std::gcd(face, q) == 1) {
        maximal = false;
        break;
      }
    }
    if (maximal) facets_.push_back(face);
  }
}

SimplicialComplex SimplicialComplex::build(std::shared_ptr<const Sieve> sieve, std::uint64_t n) {
  if (n == 0) throw DomainError("the complex needs n >= 1");
  sieve->require(n);
  std::vector<std::uint64_t> vertices;
  for (std::uint64_t q = 2; q <= n; ++q) {
    if (sieve->is_prime_power(q)) vertices.push_back(q);
  }
  return SimplicialComplex(std::move(sieve), n, std::move(vertices));
}

SimplicialComplex SimplicialComplex::induced(const std::vector<std::uint64_t>& subset) const {
  std::vector<std::uint64_t> u = subset;
  std::sort(u.begin(), u.end());
  u.erase(std::unique(u.begin(), u.end()), u.end());
  for (std::uint64_t q : u) {
    if (!std::binary_search(vertices_.begin(), vertices_.end(), q)) {
      throw DomainError(std::to_string(q) + " is not a vertex of the complex");
    }
  }
  return SimplicialComplex(sieve_, n_, std::move(u));
}

bool SimplicialComplex::contains(std::uint64_t face) const {
  return std::binary_search(faces_.begin(), faces_.end(), face);
}

std::vector<std::uint64_t> SimplicialComplex::vertex_set(std::uint64_t face) const {
  // Components come out ordered by prime, not by value (12 -> 4, 3).
  auto parts = phi_decode(*sieve_, face).parts();
  std::sort(parts.begin(), parts.end());
  return parts;
}

std::vector<std::vector<std::uint64_t>> SimplicialComplex::faces_by_size() const {
  std::vector<std::vector<std::uint64_t>> out(static_cast<std::size_t>(dimension_) + 2);
  for (std::uint64_t face : faces_) {
    out[static_cast<std::size_t>(face == 1 ? 0 : sieve_->omega(face))].push_back(face);
  }
  return out;
}

// ---------------------------------------------------------------------------
// f- and h-vectors

std::vector<std::int64_t> h_from_f(const std::vector<std::int64_t>& f) {
  const auto d = static_cast<std::int64_t>(f.size()) - 1;
  std::vector<std::int64_t> h;
  for (std::int64_t k = 0; k <= d; ++k) {
    BigInt acc = 0;
    for (std::int64_t i = 0; i <= k; ++i) {
      const BigInt term = binomial(d - i, k - i) * f[static_cast<std::size_t>(i)];
      acc += ((k - i) % 2 == 0) ? term : BigInt(-term);
    }
    h.push_back(to_int64(acc));
  }
  return h;
}

std::vector<std::int64_t> f_from_h(const std::vector<std::int64_t>& h) {
  const auto d = static_cast<std::int64_t>(h.size()) - 1;
  std::vector<std::int64_t> f;
  for (std::int64_t i = 0; i <= d; ++i) {
    BigInt acc = 0;
    for (std::int64_t k = 0; k <= i; ++k) acc += binomial(d - k, i - k) * h[static_cast<std::size_t>(k)];
    f.push_back(to_int64(acc));
  }
  return f;
}

FHVectors f_h_vectors(const SimplicialComplex& complex) {
  FHVectors out;
  for (const auto& faces : complex.faces_by_size()) {
    out.f.push_back(static_cast<std::int64_t>(faces.size()));
  }
  out.h = h_from_f(out.f);
  return out;
}

FHVectors f_h_vectors(const Sieve& sieve, std::uint64_t n) {
  const SpecialFunctions sf = special_functions(sieve, n);
  FHVectors out;
  for (std::uint64_t c : sf.pi_k) out.f.push_back(static_cast<std::int64_t>(c));
  out.h = h_from_f(out.f);
  return out;
}

// ---------------------------------------------------------------------------
// Connectivity of the 1-skeleton

Connectivity connectivity(const SimplicialComplex& complex) {
  const auto& v = complex.vertices();
  std::vector<std::size_t> parent(v.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (std::size_t a = 0; a < v.size(); ++a) {
    for (std::size_t b = a + 1; b < v.size() && v[b] <= complex.n() / v[a]; ++b) {
      if (std::gcd(v[a], v[b]) == 1 && complex.contains(v[a] * v[b])) parent[find(b)] = find(a);
    }
  }
  std::map<std::size_t, std::vector<std::uint64_t>> groups;
  for (std::size_t a = 0; a < v.size(); ++a) groups[find(a)].push_back(v[a]);
  Connectivity out;
  for (auto& [root, members] : groups) {
    if (members.size() == 1) {
      out.isolated.push_back(members.front());
    } else {
      out.components.push_back(std::move(members));
    }
  }
  std::sort(out.isolated.begin(), out.isolated.end());
  std::sort(out.components.begin(), out.components.end());
  return out;
}

// ---------------------------------------------------------------------------
// Hilbert series

HilbertSeries hilbert_series(const FHVectors& fh) {
  HilbertSeries out;
  std::vector<BigInt> a(fh.f.begin(), fh.f.end());
  std::vector<BigInt> h(fh.h.begin(), fh.h.end());
  out.artinified = IntPolynomial(std::move(a));
  out.numerator = IntPolynomial(std::move(h));
  out.denominator_exponent = static_cast<int>(fh.f.size()) - 1;
  return out;
}

bool froberg_identity_holds(const HilbertSeries& hs) {
  const int d = hs.denominator_exponent;
  const IntPolynomial t{BigInt(0), BigInt(1)};
  const IntPolynomial one_minus_t{BigInt(1), BigInt(-1)};
  IntPolynomial composed;
  for (int i = 0; i <= hs.artinified.degree(); ++i) {
    if (i > d) return false;
    composed += hs.artinified[static_cast<std::size_t>(i)] *
                (t.pow(static_cast<unsigned>(i)) * one_minus_t.pow(static_cast<unsigned>(d - i)));
  }
  return composed == hs.numerator;
}

// ---------------------------------------------------------------------------
// Symmetric Hilbert polynomials

std::uint64_t count_with_omega(const Sieve& sieve, std::uint64_t x, int s) {
  if (s < 0) return 0;
  const auto primes = sieve.primes();
  std::function<std::uint64_t(std::size_t, std::uint64_t, int)> walk =
      [&](std::size_t start, std::uint64_t product, int remaining) -> std::uint64_t {
    if (remaining == 0) return 1;
    std::uint64_t count = 0;
    for (std::size_t i = start;; ++i) {
      if (i + static_cast<std::size_t>(remaining) > primes.size()) {
        // Unsieved primes exceed limit(); they cannot fit when that is > x / product.
        if (sieve.limit() >= x / product) break;
        throw SieveLimitError("counting omega = " + std::to_string(s) + " up to " +
                              std::to_string(x) + " needs more primes than the sieve holds");
      }
      // The smallest completion uses the next `remaining` primes.
      std::uint64_t least = product;
      bool fits = true;
      for (int j = 0; j < remaining && fits; ++j) {
        const std::uint64_t p = primes[i + static_cast<std::size_t>(j)];
        if (p > x / least) fits = false;
        else least *= p;
      }
      if (!fits) break;
      const std::uint64_t p = primes[i];
      for (std::uint64_t q = p; q <= x / product; q *= p) {
        count += walk(i + 1, product * q, remaining - 1);
        if (q > x / p) break;
      }
    }
    return count;
  };
  if (x == 0) return 0;
  return walk(0, 1, s);
}

namespace {

// Lower bound on the number of prime powers <= x: exact from the sieve when
// possible, otherwise pi(x) > x / ln x (valid for x >= 17).
std::uint64_t vertex_count_lower_bound(const Sieve& sieve, std::uint64_t x) {
  if (x <= sieve.limit()) return count_with_omega(sieve, x, 1);
  const double xd = static_cast<double>(x);
  const double bound = std::floor(xd / std::log(xd));
  return bound > 1.0 ? static_cast<std::uint64_t>(bound) - 1 : 0;
}

}  // namespace

SymmetricScan symmetric_scan(const Sieve& sieve, int r_max) {
  if (r_max < 1) throw DomainError("symmetric scan needs r_max >= 1");
  SymmetricScan out;
  for (int r = 1; r <= r_max; ++r) {
    IntervalCertificate cert;
    cert.r = r;
    cert.lo = primorial(r);
    cert.hi = mul_or_throw(sieve.prime(static_cast<std::size_t>(r) + 1), primorial(r - 1));

    // Palindromic needs f_0 = f_{r-2}; both are nondecreasing in n, so a gap
    // at the ends of the interval rules out every n in it.
    try {
      cert.vertex_lower_bound = vertex_count_lower_bound(sieve, cert.lo);
      cert.top_face_upper_bound = count_with_omega(sieve, cert.hi - 1, r - 1);
      cert.pruned = r >= 3 && cert.vertex_lower_bound > cert.top_face_upper_bound;
    } catch (const SieveLimitError&) {
      cert.pruned = false;
    }
    out.intervals.push_back(cert);
    if (cert.pruned) continue;

    sieve.require(cert.hi - 1);
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(r) + 2, 0);
    counts[0] = 1;
    for (std::uint64_t k = 2; k < cert.lo; ++k) {
      const auto w = static_cast<std::size_t>(sieve.omega(k));
      if (w < counts.size()) ++counts[w];
    }
    for (std::uint64_t n = cert.lo; n < cert.hi; ++n) {
      const auto w = static_cast<std::size_t>(sieve.omega(n));
      if (w < counts.size()) ++counts[w];
      std::vector<BigInt> coeffs(counts.begin(), counts.begin() + r + 1);
      IntPolynomial poly(std::move(coeffs));
      if (poly.degree() == r && poly.is_palindromic()) out.matches.push_back({r, n, std::move(poly)});
    }
  }
  return out;
}

std::vector<H2Row> h2_scan(const Sieve& sieve, std::uint64_t n_min, std::uint64_t n_max) {
  if (n_min < 2) throw DomainError("h2 scan needs n_min >= 2");
  if (n_max < n_min) throw DomainError("h2 scan needs n_min <= n_max");
  sieve.require(n_max + 1);

  // Running counts f_{-1}, f_0, f_1 from n = 1 upward, one extra on each side
  // so that local maxima at the ends are decided.
  std::int64_t f0 = 0;
  std::int64_t f1 = 0;
  auto h2_of = [](int d, std::int64_t a, std::int64_t b) {
    return to_int64(binomial(d, 2) - binomial(d - 1, 1) * a + b);
  };
  std::vector<std::int64_t> h2;
  std::vector<int> ell;
  for (std::uint64_t n = 2; n <= n_max + 1; ++n) {
    const int w = sieve.omega(n);
    if (w == 1) ++f0;
    if (w == 2) ++f1;
    if (n + 1 >= n_min) {
      const int d = primorial_rank(n);
      h2.push_back(h2_of(d, f0, f1));
      ell.push_back(d);
    }
  }
  // h2[0] belongs to n_min - 1 (or n_min itself when n_min == 2).
  const std::uint64_t first = n_min == 2 ? 2 : n_min - 1;
  std::vector<H2Row> out;
  for (std::uint64_t n = n_min; n <= n_max; ++n) {
    const std::size_t i = n - first;
    H2Row row;
    row.n = n;
    row.h2 = h2[i];
    row.ell = ell[i];
    const bool above_left = i == 0 || h2[i] > h2[i - 1];
    row.strict_local_max = above_left && h2[i] > h2[i + 1];
    row.ell_jump = ell[i] < ell[i + 1];
    out.push_back(row);
  }
  return out;
}

std::string to_dot(const SimplicialComplex& complex) {
  std::ostringstream os;
  os << "graph complex_" << complex.n() << " {\n";
  for (std::uint64_t q : complex.vertices()) os << "  " << q << ";\n";
  for (std::uint64_t face : complex.faces()) {
    if (face == 1) continue;
    const auto vs = complex.vertex_set(face);
    if (vs.size() == 2) os << "  " << vs[0] << " -- " << vs[1] << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace unitary
