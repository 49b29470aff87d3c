#pragma once

// Lexicographic facet order and the Bjorner-Wachs shelling test for
// possibly non-pure complexes.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "unitary/complex.hpp"

namespace unitary {

using VertexSet = std::vector<std::uint64_t>;  // ascending

/// sigma > tau iff the least element of the symmetric difference lies in
/// sigma. The empty set is the minimum, and sigma >= tau implies
/// sigma + {w} >= tau + {w} >= tau for any w outside both.
std::strong_ordering lex_compare(const VertexSet& sigma, const VertexSet& tau);

struct FacetOrder {
  std::vector<VertexSet> facets;
};

/// Facets of the complex, strictly decreasing under lex_compare.
FacetOrder shelling_order(const SimplicialComplex& complex);

struct ShellingCheck {
  bool ok = true;
  /// 0-based positions (i, k), i < k, violating the criterion.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

/// True iff for all i < k there are j < k and x in F_k with
/// F_i n F_k  c  F_j n F_k = F_k \ {x}.
ShellingCheck verify_shelling(const FacetOrder& order);

}  // namespace unitary
