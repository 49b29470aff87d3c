#pragma once

// Prime sieve, the special counting functions, unitary arithmetic, and the
// bijection between positive integers and separated monomials.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace unitary {

inline constexpr std::uint64_t kDefaultSieveLimit = 10'000'000;

/// Returns a*b, or nullopt if the product does not fit in 64 bits.
std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b);
/// Returns a*b or throws OverflowError.
std::uint64_t mul_or_throw(std::uint64_t a, std::uint64_t b);

/// Smallest-prime-factor table for 2..limit. Immutable once built, so one
/// instance may be shared freely between threads.
class Sieve {
 public:
  explicit Sieve(std::uint64_t limit = kDefaultSieveLimit);

  static std::shared_ptr<const Sieve> create(std::uint64_t limit = kDefaultSieveLimit);

  std::uint64_t limit() const { return limit_; }

  /// Throws SieveLimitError when k > limit().
  void require(std::uint64_t k) const;

  std::uint64_t smallest_prime_factor(std::uint64_t k) const;
  bool is_prime(std::uint64_t k) const;
  bool is_prime_power(std::uint64_t k) const;
  /// Number of distinct prime factors.
  int omega(std::uint64_t k) const;

  /// All primes <= limit(), ascending.
  std::span<const std::uint64_t> primes() const { return primes_; }
  /// The i-th prime, 1-based (prime(1) == 2).
  std::uint64_t prime(std::size_t i) const;
  /// 1-based index of prime p; throws DomainError if p is not prime.
  std::size_t prime_index(std::uint64_t p) const;
  /// Number of primes <= x, for x <= limit().
  std::uint64_t prime_count(std::uint64_t x) const;

 private:
  std::uint64_t limit_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint64_t> primes_;
};

struct PrimePower {
  std::uint64_t prime = 0;
  std::uint32_t exponent = 0;

  std::uint64_t value() const;
  friend auto operator<=>(const PrimePower&, const PrimePower&) = default;
};

/// A positive integer split into its pairwise-coprime prime-power parts,
/// i.e. the separated monomial it corresponds to.
struct UnitaryFactorization {
  std::uint64_t value = 1;
  std::vector<PrimePower> components;  // strictly increasing primes

  int omega() const { return static_cast<int>(components.size()); }
  /// The prime-power values of the components (the vertex set of the face).
  std::vector<std::uint64_t> parts() const;
  friend bool operator==(const UnitaryFactorization&, const UnitaryFactorization&) = default;
};

/// d (+) m: the product when gcd(d, m) == 1, otherwise Zero (nullopt).
/// Throws OverflowError rather than wrapping.
std::optional<std::uint64_t> unitary_product(std::uint64_t d, std::uint64_t m);

/// Sorted unitary divisors of k; there are 2^omega(k) of them.
std::vector<std::uint64_t> unitary_divisors(const Sieve& sieve, std::uint64_t k);

UnitaryFactorization phi_decode(const Sieve& sieve, std::uint64_t k);

/// Product of the components, or Zero (nullopt) when two share a prime.
std::optional<std::uint64_t> phi_encode(std::span<const PrimePower> components);

/// Largest r with p_1 * ... * p_r <= n.
int primorial_rank(std::uint64_t n);
/// primorial_rank(2n) - 2, the predicted top homology degree of the complex.
/// Requires n < 2^63.
int predicted_homological_degree(std::uint64_t n);
/// p_1 * ... * p_r; throws OverflowError past 2^64.
std::uint64_t primorial(int r);

struct SpecialFunctions {
  std::uint64_t n = 0;
  std::uint64_t pi = 0;        // primes <= n
  std::uint64_t pi_prime = 0;  // prime powers <= n
  int ell = 0;
  int v = 0;
  std::vector<std::uint64_t> pi_k;  // pi_k[k] = #{ j <= n : omega(j) = k }, 0 <= k <= ell
};

SpecialFunctions special_functions(const Sieve& sieve, std::uint64_t n);

/// Exponents lambda_i = max{ j : p_i^j <= n }, one per prime <= n.
struct LambdaPartition {
  std::uint64_t n = 0;
  std::vector<std::uint32_t> parts;

  std::uint64_t total() const;
};

LambdaPartition lambda_vector(const Sieve& sieve, std::uint64_t n);

/// ln(n) / ln(p_i) with n = 10^log10_n; i is 1-based. Plotting only.
double lambda_estimate(const Sieve& sieve, double log10_n, std::size_t i);

}  // namespace unitary
