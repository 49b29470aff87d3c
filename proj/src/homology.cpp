#include "unitary/homology.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <thread>

#include "unitary/errors.hpp"

namespace unitary {

IntegerMatrix boundary_matrix(const SimplicialComplex& complex, std::size_t size) {
  const auto by_size = complex.faces_by_size();
  if (size == 0 || size >= by_size.size()) {
    const std::size_t rows = size == 0 || size > by_size.size() ? 0 : by_size[size - 1].size();
    return IntegerMatrix(rows, 0);
  }
  const auto& rows = by_size[size - 1];
  const auto& cols = by_size[size];
  IntegerMatrix m(rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const auto vs = complex.vertex_set(cols[c]);
    for (std::size_t j = 0; j < vs.size(); ++j) {
      const std::uint64_t sub = cols[c] / vs[j];
      const auto r = static_cast<std::size_t>(std::lower_bound(rows.begin(), rows.end(), sub) -
                                              rows.begin());
      m.at(r, c) = (j % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

std::size_t HomologyProfile::rank(int degree) const {
  for (const auto& g : groups) {
    if (g.degree == degree) return g.rank;
  }
  return 0;
}

bool HomologyProfile::torsion_free() const {
  return std::all_of(groups.begin(), groups.end(), [](const HomologyGroup& g) { return g.torsion.empty(); });
}

int HomologyProfile::top_degree() const {
  int top = -2;
  for (const auto& g : groups) {
    if (g.rank > 0 || !g.torsion.empty()) top = std::max(top, g.degree);
  }
  return top;
}

std::int64_t HomologyProfile::euler_characteristic() const {
  std::int64_t chi = 0;
  for (const auto& g : groups) {
    const auto r = static_cast<std::int64_t>(g.rank);
    chi += (g.degree % 2 == 0) ? r : -r;
  }
  return chi;
}

HomologyProfile reduced_homology(const SimplicialComplex& complex) {
  const auto by_size = complex.faces_by_size();
  const std::size_t sizes = by_size.size();  // face sizes 0 .. sizes - 1
  // forms[s]: Smith form of the boundary from size s to size s - 1.
  std::vector<SmithForm> forms(sizes + 1);
  for (std::size_t s = 1; s < sizes; ++s) forms[s] = smith_normal_form(boundary_matrix(complex, s));

  HomologyProfile out;
  for (std::size_t s = 0; s < sizes; ++s) {
    HomologyGroup g;
    g.degree = static_cast<int>(s) - 1;
    g.rank = by_size[s].size() - forms[s].rank - forms[s + 1].rank;
    for (const BigInt& d : forms[s + 1].invariant_factors) {
      if (d != 1) g.torsion.push_back(d);
    }
    out.groups.push_back(std::move(g));
  }
  return out;
}

int homological_degree(std::shared_ptr<const Sieve> sieve, std::uint64_t n) {
  const auto complex = SimplicialComplex::build(std::move(sieve), n);
  return std::max(reduced_homology(complex).top_degree(), -1);
}

// ---------------------------------------------------------------------------
// Induced-subcomplex scan

namespace {

struct FaceTable {
  std::vector<std::uint64_t> mask;
  std::vector<std::size_t> size;
  // Boundary of each face: (index of the codimension-one face, sign).
  std::vector<std::vector<std::pair<std::size_t, int>>> boundary;
  std::size_t max_size = 0;
};

FaceTable face_table(const SimplicialComplex& complex) {
  const auto& vertices = complex.vertices();
  const auto& faces = complex.faces();
  FaceTable t;
  for (std::uint64_t face : faces) {
    const auto vs = complex.vertex_set(face);
    std::uint64_t mask = 0;
    std::vector<std::pair<std::size_t, int>> bd;
    for (std::size_t j = 0; j < vs.size(); ++j) {
      const auto v = static_cast<std::size_t>(
          std::lower_bound(vertices.begin(), vertices.end(), vs[j]) - vertices.begin());
      mask |= std::uint64_t{1} << v;
      const auto sub = static_cast<std::size_t>(
          std::lower_bound(faces.begin(), faces.end(), face / vs[j]) - faces.begin());
      bd.emplace_back(sub, j % 2 == 0 ? 1 : -1);
    }
    t.mask.push_back(mask);
    t.size.push_back(bd.size());
    t.max_size = std::max(t.max_size, bd.size());
    t.boundary.push_back(std::move(bd));
  }
  return t;
}

}  // namespace

SubsetScan SubsetScan::run(std::shared_ptr<const Sieve> sieve, std::uint64_t n, int cap,
                           unsigned threads) {
  const auto complex = SimplicialComplex::build(std::move(sieve), n);
  const std::size_t r = complex.vertices().size();
  if (static_cast<long>(r) > cap || r > 40) {
    throw CapExceeded("the complex has " + std::to_string(r) + " vertices, so a full scan visits 2^" +
                      std::to_string(r) + " subcomplexes; the cap is " + std::to_string(cap));
  }
  SubsetScan scan;
  scan.n_ = n;
  scan.vertices_ = complex.vertices();
  const FaceTable table = face_table(complex);
  scan.degrees_ = static_cast<int>(table.max_size) + 1;  // degrees -1 .. max_size - 1
  const std::uint64_t total = std::uint64_t{1} << r;
  scan.ranks_.assign(total * static_cast<std::uint64_t>(scan.degrees_), 0);

  auto work = [&](std::uint64_t begin, std::uint64_t end) {
    const std::size_t faces = table.mask.size();
    std::vector<std::size_t> local(faces);
    std::vector<std::vector<std::size_t>> members(table.max_size + 1);
    std::vector<std::size_t> boundary_rank(table.max_size + 2);
    std::vector<std::int64_t> matrix;
    for (std::uint64_t mask = begin; mask < end; ++mask) {
      for (auto& m : members) m.clear();
      for (std::size_t f = 0; f < faces; ++f) {
        if ((table.mask[f] & ~mask) != 0) continue;
        local[f] = members[table.size[f]].size();
        members[table.size[f]].push_back(f);
      }
      std::fill(boundary_rank.begin(), boundary_rank.end(), 0);
      for (std::size_t s = 1; s <= table.max_size; ++s) {
        const std::size_t rows = members[s - 1].size();
        const std::size_t cols = members[s].size();
        if (rows == 0 || cols == 0) continue;
        matrix.assign(rows * cols, 0);
        for (std::size_t c = 0; c < cols; ++c) {
          for (const auto& [sub, sign] : table.boundary[members[s][c]]) {
            matrix[local[sub] * cols + c] = sign;
          }
        }
        boundary_rank[s] = rational_rank(matrix, rows, cols);
      }
      std::uint32_t* out = &scan.ranks_[mask * static_cast<std::uint64_t>(scan.degrees_)];
      for (std::size_t s = 0; s <= table.max_size; ++s) {
        out[s] = static_cast<std::uint32_t>(members[s].size() - boundary_rank[s] - boundary_rank[s + 1]);
      }
    }
  };

  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, total));
  if (threads <= 1) {
    work(0, total);
    return scan;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  const std::uint64_t chunk = (total + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t begin = t * chunk;
    const std::uint64_t end = std::min(total, begin + chunk);
    pool.emplace_back([&, t, begin, end] {
      try {
        work(begin, end);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return scan;
}

std::uint32_t SubsetScan::rank(std::uint64_t mask, int degree) const {
  if (degree < -1 || degree > max_degree()) return 0;
  return ranks_[mask * static_cast<std::uint64_t>(degrees_) + static_cast<std::uint64_t>(degree + 1)];
}

std::vector<std::uint64_t> SubsetScan::subset(std::uint64_t mask) const {
  std::vector<std::uint64_t> out;
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    if (mask >> v & 1U) out.push_back(vertices_[v]);
  }
  return out;
}

BettiTable hochster_betti(const SubsetScan& scan) {
  BettiTable table;
  table.n = scan.n();
  table.totals.assign(scan.vertex_count() + 1, 0);
  for (std::uint64_t mask = 0; mask < scan.subset_count(); ++mask) {
    const int u = std::popcount(mask);
    for (int d = -1; d <= scan.max_degree(); ++d) {
      const std::uint32_t value = scan.rank(mask, d);
      if (value == 0) continue;
      const int i = u - d - 1;
      table.entries.push_back({i, mask, scan.subset(mask), value});
      table.totals[static_cast<std::size_t>(i)] += value;
    }
  }
  std::stable_sort(table.entries.begin(), table.entries.end(),
                   [](const BettiEntry& a, const BettiEntry& b) { return a.i < b.i; });
  while (table.totals.size() > 1 && table.totals.back() == 0) table.totals.pop_back();
  return table;
}

std::int64_t mu_c_via_homology(const SubsetScan& scan, const Sieve& sieve) {
  const BettiTable table = hochster_betti(scan);
  std::int64_t beta1 = table.totals.size() > 1 ? static_cast<std::int64_t>(table.totals[1]) : 0;
  if (scan.n() >= 2) {
    for (std::uint32_t lambda : lambda_vector(sieve, scan.n()).parts) {
      beta1 -= static_cast<std::int64_t>(lambda) * (static_cast<std::int64_t>(lambda) - 1) / 2;
    }
  }
  return beta1;
}

int regularity(const SubsetScan& scan) {
  int top = -1;
  for (std::uint64_t mask = 0; mask < scan.subset_count(); ++mask) {
    for (int d = scan.max_degree(); d > top; --d) {
      if (scan.rank(mask, d) > 0) {
        top = d;
        break;
      }
    }
  }
  return 1 + top;
}

namespace {

// weight[u][d + 1] = sum of rank H_d over subsets of size u.
std::vector<std::vector<BigInt>> rank_weights(const SubsetScan& scan) {
  std::vector<std::vector<BigInt>> w(scan.vertex_count() + 1,
                                     std::vector<BigInt>(static_cast<std::size_t>(scan.max_degree()) + 2));
  for (std::uint64_t mask = 0; mask < scan.subset_count(); ++mask) {
    const auto u = static_cast<std::size_t>(std::popcount(mask));
    for (int d = -1; d <= scan.max_degree(); ++d) {
      const std::uint32_t value = scan.rank(mask, d);
      if (value != 0) w[u][static_cast<std::size_t>(d + 1)] += value;
    }
  }
  return w;
}

}  // namespace

PoincareSeries poincare_series(const SubsetScan& scan, int t_max) {
  if (t_max < 0) throw DomainError("t_max must be nonnegative");
  const auto w = rank_weights(scan);
  PoincareSeries out;
  out.square_zero.assign(static_cast<std::size_t>(t_max) + 1, 0);
  for (std::size_t u = 0; u < w.size(); ++u) {
    for (std::size_t di = 0; di < w[u].size(); ++di) {
      const BigInt& weight = w[u][di];
      if (weight == 0) continue;
      const int d = static_cast<int>(di) - 1;
      const auto shift = static_cast<std::int64_t>(u) - d - 1;
      if (out.polynomial_ring.size() <= static_cast<std::size_t>(shift)) {
        out.polynomial_ring.resize(static_cast<std::size_t>(shift) + 1, 0);
      }
      out.polynomial_ring[static_cast<std::size_t>(shift)] += weight;
      for (std::int64_t k = 0; shift + k <= t_max; ++k) {
        out.square_zero[static_cast<std::size_t>(shift + k)] +=
            weight * binomial(static_cast<std::int64_t>(u) - 1 + k, k);
      }
    }
  }
  return out;
}

BigInt exterior_betti(const SubsetScan& scan, int i) {
  if (i < 0) throw DomainError("Betti index must be nonnegative");
  const auto w = rank_weights(scan);
  BigInt total = 0;
  for (std::size_t u = 0; u < w.size(); ++u) {
    for (std::size_t di = 0; di < w[u].size(); ++di) {
      if (w[u][di] == 0) continue;
      const std::int64_t d = static_cast<std::int64_t>(di) - 1;
      total += w[u][di] * binomial(d + i, d + 1 + i - static_cast<std::int64_t>(u));
    }
  }
  return total;
}

}  // namespace unitary
