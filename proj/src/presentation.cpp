#include "unitary/presentation.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "unitary/errors.hpp"

namespace unitary {

std::size_t VariableSet::tall_columns() const {
  std::size_t count = 0;
  for (const Variable& y : vars) {
    if (y.height == 2) ++count;
  }
  return count;
}

VariableSet variables(const Sieve& sieve, std::uint64_t n) {
  if (n < 2) throw DomainError("variables require n >= 2");
  sieve.require(n);
  VariableSet out;
  out.n = n;
  const LambdaPartition lambda = lambda_vector(sieve, n);
  for (std::size_t i = 0; i < lambda.parts.size(); ++i) {
    const std::uint64_t p = sieve.prime(i + 1);
    std::uint64_t q = 1;
    for (std::uint32_t j = 1; j <= lambda.parts[i]; ++j) {
      q *= p;
      out.vars.push_back({static_cast<std::uint32_t>(i + 1), j});
      out.values.push_back(q);
    }
  }
  return out;
}

IdealPresentation generators(const Sieve& sieve, std::uint64_t n) {
  IdealPresentation out;
  out.n = n;
  out.variables = variables(sieve, n);
  const auto& vars = out.variables.vars;

  out.squares = vars;
  for (std::size_t a = 0; a < vars.size(); ++a) {
    for (std::size_t b = a + 1; b < vars.size() && vars[b].column == vars[a].column; ++b) {
      out.column_products.emplace_back(vars[a], vars[b]);
    }
  }

  // value -> factorization; duplicates arise once per component of a value.
  std::map<std::uint64_t, UnitaryFactorization> candidates;
  for (std::size_t v = 0; v < vars.size(); ++v) {
    const std::uint64_t q = out.variables.values[v];
    const std::uint64_t p = sieve.prime(vars[v].column);
    for (std::uint64_t k = n / q + 1; k <= n; ++k) {
      if (k % p == 0) continue;
      const std::uint64_t value = mul_or_throw(q, k);
      if (candidates.contains(value)) continue;
      UnitaryFactorization f = phi_decode(sieve, k);
      f.value = value;
      f.components.push_back({p, vars[v].height});
      std::sort(f.components.begin(), f.components.end());
      candidates.emplace(value, std::move(f));
    }
  }

  // Every maximal proper unitary divisor value/c is <= n; smaller unitary
  // divisors divide one of these, so this covers all of them.
  for (const auto& [value, f] : candidates) {
    const bool minimal = std::all_of(f.components.begin(), f.components.end(),
                                     [&](const PrimePower& c) { return value / c.value() <= n; });
    if (!minimal) continue;
    out.separated.push_back(value);
    out.separated_degrees.push_back(f.omega());
  }
  return out;
}

MuCounts mu_counts(const IdealPresentation& p) {
  return {p.squares.size(), p.column_products.size(), p.separated.size()};
}

MuCounts mu_counts(const Sieve& sieve, std::uint64_t n) { return mu_counts(generators(sieve, n)); }

int max_generator_degree(const IdealPresentation& p) {
  // A is never empty, so degree 2 is always attained.
  int degree = 2;
  for (int d : p.separated_degrees) degree = std::max(degree, d);
  return degree;
}

int max_generator_degree(const Sieve& sieve, std::uint64_t n) {
  return max_generator_degree(generators(sieve, n));
}

bool is_quadratic(const Sieve& sieve, std::uint64_t n) { return max_generator_degree(sieve, n) <= 2; }

GeneratorDegreeReport generator_degree_report(const Sieve& sieve, std::uint64_t n) {
  GeneratorDegreeReport r;
  r.n = n;
  r.degree = max_generator_degree(sieve, n);
  r.v = predicted_homological_degree(n);
  r.bound_v = std::max(2, r.v);
  r.bound_v_plus_2 = std::max(2, r.v + 2);
  return r;
}

bool in_ideal(const IdealPresentation& p,
              const std::vector<std::pair<std::size_t, std::uint32_t>>& monomial) {
  const auto& vars = p.variables.vars;
  for (std::size_t a = 0; a < monomial.size(); ++a) {
    if (monomial[a].second == 0) continue;
    if (monomial[a].second >= 2) return true;  // A
    for (std::size_t b = a + 1; b < monomial.size(); ++b) {
      if (monomial[b].second > 0 && vars[monomial[a].first].column == vars[monomial[b].first].column) {
        return true;  // B
      }
    }
  }
  // Square-free and separated: test every unitary divisor against C.
  std::vector<std::uint64_t> parts;
  for (const auto& [index, exponent] : monomial) {
    if (exponent > 0) parts.push_back(p.variables.values[index]);
  }
  const std::size_t subsets = std::size_t{1} << parts.size();
  for (std::size_t mask = 1; mask < subsets; ++mask) {
    std::uint64_t value = 1;
    bool overflow = false;
    for (std::size_t b = 0; b < parts.size(); ++b) {
      if (!(mask >> b & 1U)) continue;
      const auto next = checked_mul(value, parts[b]);
      if (!next) {
        overflow = true;
        break;
      }
      value = *next;
    }
    if (overflow) continue;
    if (std::binary_search(p.separated.begin(), p.separated.end(), value)) return true;
  }
  return false;
}

namespace {

// Group of each variable: its column if the column is tall, else the
// residual group numbered tall_columns().
std::vector<std::size_t> variable_groups(const VariableSet& vs) {
  std::vector<std::uint32_t> height(vs.vars.empty() ? 0 : vs.vars.back().column + 1, 0);
  for (const Variable& y : vs.vars) height[y.column] = std::max(height[y.column], y.height);
  std::vector<std::size_t> group;
  const std::size_t residual = vs.tall_columns();
  for (const Variable& y : vs.vars) {
    group.push_back(height[y.column] >= 2 ? y.column - 1 : residual);
  }
  return group;
}

}  // namespace

MultistabilityResult check_multistability(const Sieve& sieve, std::uint64_t n, int max_degree,
                                          std::uint64_t max_monomials) {
  const IdealPresentation p = generators(sieve, n);
  const int degree_bound = max_degree > 0 ? max_degree : max_generator_degree(p);
  const std::size_t r = p.variables.size();
  const std::vector<std::size_t> group = variable_groups(p.variables);

  MultistabilityResult result;
  result.groups = p.group_count() + 1;

  std::vector<std::uint32_t> exponents(r, 0);
  std::uint64_t enumerated = 0;

  auto sparse = [&] {
    std::vector<std::pair<std::size_t, std::uint32_t>> m;
    for (std::size_t i = 0; i < r; ++i) {
      if (exponents[i] > 0) m.emplace_back(i, exponents[i]);
    }
    return m;
  };

  auto check_member = [&]() -> bool {
    const auto m = sparse();
    if (!in_ideal(p, m)) return true;
    ++result.monomials;
    for (std::size_t a = 0; a < r; ++a) {
      if (exponents[a] == 0) continue;
      for (std::size_t b = 0; b < r; ++b) {
        if (group[b] != group[a] || p.variables.values[b] <= p.variables.values[a]) continue;
        --exponents[a];
        ++exponents[b];
        const bool ok = in_ideal(p, sparse());
        ++exponents[a];
        --exponents[b];
        if (!ok) {
          result.ok = false;
          result.witness = m;
          result.from = a;
          result.to = b;
          return false;
        }
      }
    }
    return true;
  };

  // Monomials of total degree 1..degree_bound, variables in nondecreasing order.
  std::function<bool(std::size_t, int)> walk = [&](std::size_t start, int remaining) -> bool {
    for (std::size_t i = start; i < r; ++i) {
      ++exponents[i];
      if (++enumerated > max_monomials) {
        throw CapExceeded("multistability check exceeds " + std::to_string(max_monomials) +
                          " monomials");
      }
      bool ok = check_member();
      if (ok && remaining > 1) ok = walk(i, remaining - 1);
      --exponents[i];
      if (!ok) return false;
    }
    return true;
  };
  walk(0, degree_bound);
  return result;
}

}  // namespace unitary
