#include "unitary/arith.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <string>

#include "unitary/errors.hpp"

namespace unitary {

namespace {

__extension__ using u128 = unsigned __int128;

// Enough primes for any primorial that fits in 64 bits (p_16 = 53 overflows).
constexpr std::array<std::uint64_t, 16> kSmallPrimes = {2,  3,  5,  7,  11, 13, 17, 19,
                                                        23, 29, 31, 37, 41, 43, 47, 53};

}  // namespace

std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) return std::nullopt;
  return out;
}

std::uint64_t mul_or_throw(std::uint64_t a, std::uint64_t b) {
  auto p = checked_mul(a, b);
  if (!p) {
    throw OverflowError("64-bit overflow in " + std::to_string(a) + " * " + std::to_string(b));
  }
  return *p;
}

// ---------------------------------------------------------------------------
// Sieve

Sieve::Sieve(std::uint64_t limit) : limit_(std::max<std::uint64_t>(limit, 2)) {
  if (limit_ >= (std::uint64_t{1} << 32)) {
    throw DomainError("sieve limit must be below 2^32, got " + std::to_string(limit_));
  }
  spf_.assign(limit_ + 1, 0);
  // Linear sieve: every composite is crossed out exactly once, by its spf.
  for (std::uint64_t k = 2; k <= limit_; ++k) {
    if (spf_[k] == 0) {
      spf_[k] = static_cast<std::uint32_t>(k);
      primes_.push_back(k);
    }
    for (std::uint64_t p : primes_) {
      if (p > spf_[k] || p * k > limit_) break;
      spf_[p * k] = static_cast<std::uint32_t>(p);
    }
  }
}

std::shared_ptr<const Sieve> Sieve::create(std::uint64_t limit) {
  return std::make_shared<const Sieve>(limit);
}

void Sieve::require(std::uint64_t k) const {
  if (k > limit_) {
    throw SieveLimitError("argument " + std::to_string(k) + " exceeds the sieve limit " +
                          std::to_string(limit_));
  }
}

std::uint64_t Sieve::smallest_prime_factor(std::uint64_t k) const {
  if (k < 2) throw DomainError("smallest prime factor needs k >= 2");
  require(k);
  return spf_[k];
}

bool Sieve::is_prime(std::uint64_t k) const {
  if (k < 2) return false;
  require(k);
  return spf_[k] == k;
}

bool Sieve::is_prime_power(std::uint64_t k) const {
  if (k < 2) return false;
  require(k);
  const std::uint64_t p = spf_[k];
  while (k % p == 0) k /= p;
  return k == 1;
}

int Sieve::omega(std::uint64_t k) const {
  if (k == 0) throw DomainError("omega(0) is undefined");
  require(k);
  int count = 0;
  while (k > 1) {
    const std::uint64_t p = spf_[k];
    while (k % p == 0) k /= p;
    ++count;
  }
  return count;
}

std::uint64_t Sieve::prime(std::size_t i) const {
  if (i == 0 || i > primes_.size()) {
    throw SieveLimitError("prime index " + std::to_string(i) + " is beyond the sieve (" +
                          std::to_string(primes_.size()) + " primes)");
  }
  return primes_[i - 1];
}

std::size_t Sieve::prime_index(std::uint64_t p) const {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  return static_cast<std::size_t>(std::lower_bound(primes_.begin(), primes_.end(), p) -
                                  primes_.begin()) +
         1;
}

std::uint64_t Sieve::prime_count(std::uint64_t x) const {
  require(x);
  return static_cast<std::uint64_t>(std::upper_bound(primes_.begin(), primes_.end(), x) -
                                    primes_.begin());
}

// ---------------------------------------------------------------------------
// Unitary arithmetic and the separated-monomial codec

std::uint64_t PrimePower::value() const {
  std::uint64_t v = 1;
  for (std::uint32_t e = 0; e < exponent; ++e) v = mul_or_throw(v, prime);
  return v;
}

std::vector<std::uint64_t> UnitaryFactorization::parts() const {
  std::vector<std::uint64_t> out;
  out.reserve(components.size());
  for (const auto& c : components) out.push_back(c.value());
  return out;
}

std::optional<std::uint64_t> unitary_product(std::uint64_t d, std::uint64_t m) {
  if (d == 0 || m == 0) throw DomainError("unitary product is defined on positive integers");
  if (std::gcd(d, m) != 1) return std::nullopt;
  return mul_or_throw(d, m);
}

UnitaryFactorization phi_decode(const Sieve& sieve, std::uint64_t k) {
  if (k == 0) throw DomainError("phi_decode needs k >= 1");
  sieve.require(k);
  UnitaryFactorization out{k, {}};
  while (k > 1) {
    const std::uint64_t p = sieve.smallest_prime_factor(k);
    std::uint32_t e = 0;
    while (k % p == 0) {
      k /= p;
      ++e;
    }
    out.components.push_back({p, e});
  }
  return out;
}

std::optional<std::uint64_t> phi_encode(std::span<const PrimePower> components) {
  std::vector<std::uint64_t> seen;
  seen.reserve(components.size());
  std::uint64_t value = 1;
  for (const auto& c : components) {
    if (c.exponent == 0 || c.prime < 2) {
      throw DomainError("phi_encode needs primes with exponents >= 1");
    }
    seen.push_back(c.prime);
    value = mul_or_throw(value, c.value());
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return std::nullopt;
  return value;
}

std::vector<std::uint64_t> unitary_divisors(const Sieve& sieve, std::uint64_t k) {
  const auto parts = phi_decode(sieve, k).parts();
  std::vector<std::uint64_t> out{1};
  out.reserve(std::size_t{1} << parts.size());
  for (std::uint64_t q : parts) {
    const std::size_t half = out.size();
    for (std::size_t i = 0; i < half; ++i) out.push_back(out[i] * q);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Special functions

std::uint64_t primorial(int r) {
  if (r < 0) throw DomainError("primorial of a negative count");
  if (r > static_cast<int>(kSmallPrimes.size())) {
    throw OverflowError("primorial(" + std::to_string(r) + ") exceeds 64 bits");
  }
  std::uint64_t p = 1;
  for (int i = 0; i < r; ++i) p = mul_or_throw(p, kSmallPrimes[i]);
  return p;
}

int primorial_rank(std::uint64_t n) {
  if (n == 0) throw DomainError("primorial_rank needs n >= 1");
  u128 product = 1;
  int r = 0;
  for (std::uint64_t p : kSmallPrimes) {
    product *= p;
    if (product > n) break;
    ++r;
  }
  return r;
}

int predicted_homological_degree(std::uint64_t n) {
  if (n == 0) throw DomainError("v(n) needs n >= 1");
  if (n >= (std::uint64_t{1} << 63)) throw OverflowError("v(n) needs 2n to fit in 64 bits");
  return primorial_rank(2 * n) - 2;
}

SpecialFunctions special_functions(const Sieve& sieve, std::uint64_t n) {
  if (n == 0) throw DomainError("special functions need n >= 1");
  sieve.require(n);
  SpecialFunctions out;
  out.n = n;
  out.ell = primorial_rank(n);
  out.v = predicted_homological_degree(n);
  out.pi_k.assign(static_cast<std::size_t>(out.ell) + 1, 0);
  out.pi_k[0] = 1;
  for (std::uint64_t j = 2; j <= n; ++j) {
    const int w = sieve.omega(j);
    ++out.pi_k[static_cast<std::size_t>(w)];
    if (w == 1) {
      ++out.pi_prime;
      if (sieve.is_prime(j)) ++out.pi;
    }
  }
  return out;
}

std::uint64_t LambdaPartition::total() const {
  return std::accumulate(parts.begin(), parts.end(), std::uint64_t{0});
}

LambdaPartition lambda_vector(const Sieve& sieve, std::uint64_t n) {
  if (n < 2) throw DomainError("lambda_vector needs n >= 2");
  sieve.require(n);
  LambdaPartition out{n, {}};
  for (std::uint64_t p : sieve.primes()) {
    if (p > n) break;
    std::uint32_t j = 0;
    std::uint64_t q = 1;
    for (;;) {
      auto next = checked_mul(q, p);
      if (!next || *next > n) break;
      q = *next;
      ++j;
    }
    out.parts.push_back(j);
  }
  return out;
}

double lambda_estimate(const Sieve& sieve, double log10_n, std::size_t i) {
  if (!(log10_n > 0.0)) throw DomainError("lambda_estimate needs log10(n) > 0");
  const double p = static_cast<double>(sieve.prime(i));
  return log10_n * std::log(10.0) / std::log(p);
}

}  // namespace unitary
