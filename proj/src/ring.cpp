#include "unitary/ring.hpp"

#include <numeric>

#include "unitary/errors.hpp"

namespace unitary {

namespace {

// Accumulate into a dense vector below this bound, into a map above it.
constexpr std::uint64_t kDenseConvolutionLimit = 10'000;

std::uint64_t smallest_nondividing_prime(const Sieve& sieve, std::uint64_t k) {
  for (std::uint64_t p : sieve.primes()) {
    if (k % p != 0) return p;
  }
  throw SieveLimitError("sieve exhausted looking for a prime coprime to " + std::to_string(k));
}

}  // namespace

TruncatedFunction::TruncatedFunction(std::uint64_t n) : n_(n) {
  if (n == 0) throw DomainError("truncation bound must be positive");
}

TruncatedFunction TruncatedFunction::basis(std::uint64_t n, std::uint64_t k) {
  TruncatedFunction f(n);
  f.set(k, 1);
  return f;
}

void TruncatedFunction::check_index(std::uint64_t k) const {
  if (k == 0 || k > n_) {
    throw DomainError("index " + std::to_string(k) + " outside [1, " + std::to_string(n_) + "]");
  }
}

Rational TruncatedFunction::coefficient(std::uint64_t k) const {
  const auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

void TruncatedFunction::set(std::uint64_t k, const Rational& value) {
  check_index(k);
  if (value == 0) {
    terms_.erase(k);
  } else {
    terms_[k] = value;
  }
}

void TruncatedFunction::add(std::uint64_t k, const Rational& value) {
  check_index(k);
  if (value == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) terms_.erase(it);
  }
}

TruncatedFunction& TruncatedFunction::operator+=(const TruncatedFunction& other) {
  if (other.n_ != n_) throw DomainError("cannot add functions with different truncation bounds");
  for (const auto& [k, c] : other.terms_) add(k, c);
  return *this;
}

TruncatedFunction operator*(const Rational& s, const TruncatedFunction& f) {
  TruncatedFunction out(f.n());
  if (s == 0) return out;
  for (const auto& [k, c] : f.terms()) out.terms_.emplace_hint(out.terms_.end(), k, s * c);
  return out;
}

TruncatedFunction convolve(const TruncatedFunction& f, const TruncatedFunction& g) {
  if (f.n() != g.n()) {
    throw DomainError("convolution of functions truncated at " + std::to_string(f.n()) + " and " +
                      std::to_string(g.n()));
  }
  const std::uint64_t n = f.n();
  TruncatedFunction out(n);
  if (n <= kDenseConvolutionLimit) {
    std::vector<Rational> acc(n + 1);
    std::vector<bool> touched(n + 1, false);
    for (const auto& [d, a] : f.terms()) {
      for (const auto& [m, b] : g.terms()) {
        if (m > n / d) break;
        if (std::gcd(d, m) != 1) continue;
        acc[d * m] += a * b;
        touched[d * m] = true;
      }
    }
    for (std::uint64_t k = 1; k <= n; ++k) {
      if (touched[k]) out.set(k, acc[k]);
    }
    return out;
  }
  for (const auto& [d, a] : f.terms()) {
    for (const auto& [m, b] : g.terms()) {
      if (m > n / d) break;
      if (std::gcd(d, m) != 1) continue;
      out.add(d * m, a * b);
    }
  }
  return out;
}

std::vector<std::uint64_t> socle_basis(const Sieve& sieve, std::uint64_t n) {
  if (n < 2) throw DomainError("socle_basis requires n >= 2");
  sieve.require(n);
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 2; k <= n; ++k) {
    const std::uint64_t p = smallest_nondividing_prime(sieve, k);
    if (k > n / p) out.push_back(k);
  }
  return out;
}

std::uint64_t socle_dimension(const Sieve& sieve, std::uint64_t n) {
  return socle_basis(sieve, n).size();
}

SyzygySet::SyzygySet(std::uint64_t n) : n_(n) {
  if (n < 2) throw DomainError("monomial syzygies require n >= 2");
}

bool SyzygySet::contains(std::uint64_t i, std::uint64_t j) const {
  if (i < 2 || j < 2 || i > n_ || j > n_) return false;
  return i > n_ / j || std::gcd(i, j) != 1;
}

std::uint64_t SyzygySet::size() const {
  const std::uint64_t side = n_ - 1;
  std::uint64_t nonzero = 0;
  for (std::uint64_t i = 2; i <= n_ / 2; ++i) {
    for (std::uint64_t j = 2; j <= n_ / i; ++j) {
      if (std::gcd(i, j) == 1) ++nonzero;
    }
  }
  return side * side - nonzero;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> SyzygySet::points(
    std::uint64_t max_points) const {
  if (size() > max_points) {
    throw CapExceeded("syzygy set has " + std::to_string(size()) + " points, cap is " +
                      std::to_string(max_points));
  }
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  out.reserve(size());
  for (std::uint64_t i = 2; i <= n_; ++i) {
    for (std::uint64_t j = 2; j <= n_; ++j) {
      if (contains(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

SyzygySet monomial_syzygies(std::uint64_t n) { return SyzygySet(n); }

std::uint64_t k2_dimension(std::uint64_t n) {
  if (n < 2) throw DomainError("k2_dimension requires n >= 2");
  const std::uint64_t side = n - 1;
  return side * side - side;
}

Rational socle_density_series(const Sieve& sieve, std::size_t terms) {
  if (terms < 1) throw DomainError("socle density series needs at least one term");
  if (terms + 1 > sieve.primes().size()) {
    throw SieveLimitError("sieve holds only " + std::to_string(sieve.primes().size()) + " primes");
  }
  Rational sum = Rational(1, 2);
  BigInt primorial_acc = 1;
  for (std::size_t i = 1; i <= terms; ++i) {
    const BigInt p(sieve.prime(i));
    const BigInt q(sieve.prime(i + 1));
    primorial_acc *= p;
    sum += (Rational(1, p) - Rational(1, q)) / Rational(primorial_acc);
  }
  return sum;
}

double socle_density_empirical(const Sieve& sieve, std::uint64_t n) {
  return static_cast<double>(socle_dimension(sieve, n)) / static_cast<double>(n);
}

double socle_interval_estimate(const Sieve& sieve, std::uint64_t n) {
  sieve.require(n);
  const double nd = static_cast<double>(n);
  double estimate = nd / 2.0;
  double primorial_acc = 1.0;
  for (std::size_t k = 1; k + 1 <= sieve.primes().size(); ++k) {
    const double p = static_cast<double>(sieve.prime(k));
    const double q = static_cast<double>(sieve.prime(k + 1));
    primorial_acc *= p;
    if (primorial_acc > nd) break;
    estimate += (nd / p - nd / q) / primorial_acc;
  }
  return estimate;
}

bool is_gorenstein(const Sieve& sieve, std::uint64_t n) { return socle_dimension(sieve, n) == 1; }

}  // namespace unitary
