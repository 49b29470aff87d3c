#pragma once

// A_[n] as a quotient of a polynomial ring in the variables y_{i,j}, p_i^j <= n,
// by squares (A), same-column products (B) and separated monomials (C).

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "unitary/arith.hpp"

namespace unitary {

/// y_{column,height}, standing for p_column^height. Both indices are 1-based.
struct Variable {
  std::uint32_t column = 0;
  std::uint32_t height = 0;
  friend auto operator<=>(const Variable&, const Variable&) = default;
};

struct VariableSet {
  std::uint64_t n = 0;
  std::vector<Variable> vars;        // sorted by (column, height)
  std::vector<std::uint64_t> values; // values[i] = p_column^height of vars[i]

  std::size_t size() const { return vars.size(); }
  /// Number of columns of height at least 2.
  std::size_t tall_columns() const;
};

VariableSet variables(const Sieve& sieve, std::uint64_t n);

struct IdealPresentation {
  std::uint64_t n = 0;
  VariableSet variables;
  std::vector<Variable> squares;                          // A: y^2
  std::vector<std::pair<Variable, Variable>> column_products;  // B: y_{i,j} y_{i,k}, j < k
  std::vector<std::uint64_t> separated;                   // C: Phi-values, ascending
  std::vector<int> separated_degrees;                     // omega of each C value

  std::size_t group_count() const { return variables.tall_columns(); }
};

/// Minimal generators. C is built from the candidates y * Phi^{-1}(k) with
/// q = Phi(y) <= n, k <= n, gcd(q, k) = 1, qk > n, then kept iff every
/// proper unitary divisor is <= n.
IdealPresentation generators(const Sieve& sieve, std::uint64_t n);

struct MuCounts {
  std::uint64_t mu_a = 0;
  std::uint64_t mu_b = 0;
  std::uint64_t mu_c = 0;
  friend bool operator==(const MuCounts&, const MuCounts&) = default;
};

MuCounts mu_counts(const IdealPresentation& p);
MuCounts mu_counts(const Sieve& sieve, std::uint64_t n);

int max_generator_degree(const IdealPresentation& p);
int max_generator_degree(const Sieve& sieve, std::uint64_t n);
bool is_quadratic(const Sieve& sieve, std::uint64_t n);

/// The enumerated maximal degree next to the two closed forms in circulation.
struct GeneratorDegreeReport {
  std::uint64_t n = 0;
  int degree = 0;
  int v = 0;
  int bound_v = 0;       // max{2, v(n)}
  int bound_v_plus_2 = 0; // max{2, v(n) + 2}
};

GeneratorDegreeReport generator_degree_report(const Sieve& sieve, std::uint64_t n);

/// Whether a monomial, given as a sparse exponent list over the variable
/// indices of p.variables, is divisible by some generator in A, B or C.
bool in_ideal(const IdealPresentation& p,
              const std::vector<std::pair<std::size_t, std::uint32_t>>& monomial);

struct MultistabilityResult {
  bool ok = true;
  std::size_t groups = 0;        // tall columns plus one residual group
  std::uint64_t monomials = 0;   // ideal members examined
  // On failure: the ideal member, and the exchanged variable pair (from, to).
  std::vector<std::pair<std::size_t, std::uint32_t>> witness;
  std::size_t from = 0;
  std::size_t to = 0;
};

/// Exchange property of the ideal on monomials of degree <= max_degree
/// (default: the maximal generator degree). Throws CapExceeded when more than
/// max_monomials monomials would be enumerated.
MultistabilityResult check_multistability(const Sieve& sieve, std::uint64_t n, int max_degree = 0,
                                          std::uint64_t max_monomials = 5'000'000);

}  // namespace unitary
