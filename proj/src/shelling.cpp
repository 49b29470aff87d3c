#include "unitary/shelling.hpp"

#include <algorithm>
#include <iterator>

namespace unitary {

std::strong_ordering lex_compare(const VertexSet& sigma, const VertexSet& tau) {
  auto a = sigma.begin();
  auto b = tau.begin();
  while (a != sigma.end() && b != tau.end() && *a == *b) {
    ++a;
    ++b;
  }
  if (a == sigma.end() && b == tau.end()) return std::strong_ordering::equal;
  if (b == tau.end()) return std::strong_ordering::greater;
  if (a == sigma.end()) return std::strong_ordering::less;
  return *a < *b ? std::strong_ordering::greater : std::strong_ordering::less;
}

FacetOrder shelling_order(const SimplicialComplex& complex) {
  FacetOrder order;
  for (std::uint64_t facet : complex.facets()) order.facets.push_back(complex.vertex_set(facet));
  std::sort(order.facets.begin(), order.facets.end(),
            [](const VertexSet& x, const VertexSet& y) { return lex_compare(x, y) > 0; });
  return order;
}

namespace {

VertexSet intersect(const VertexSet& x, const VertexSet& y) {
  VertexSet out;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

}  // namespace

ShellingCheck verify_shelling(const FacetOrder& order) {
  const auto& f = order.facets;
  for (std::size_t k = 1; k < f.size(); ++k) {
    // x such that some earlier facet meets F_k in exactly F_k \ {x}.
    VertexSet exits;
    for (std::size_t j = 0; j < k; ++j) {
      const VertexSet common = intersect(f[j], f[k]);
      if (common.size() + 1 != f[k].size()) continue;
      for (std::uint64_t x : f[k]) {
        if (!std::binary_search(common.begin(), common.end(), x)) exits.push_back(x);
      }
    }
    std::sort(exits.begin(), exits.end());
    exits.erase(std::unique(exits.begin(), exits.end()), exits.end());
    for (std::size_t i = 0; i < k; ++i) {
      const bool covered = std::any_of(exits.begin(), exits.end(), [&](std::uint64_t x) {
        return !std::binary_search(f[i].begin(), f[i].end(), x);
      });
      if (!covered) return {false, std::make_pair(i, k)};
    }
  }
  return {true, std::nullopt};
}

}  // namespace unitary
