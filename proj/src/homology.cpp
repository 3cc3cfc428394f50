#include "macp/homology.hpp"

#include <algorithm>
#include <iterator>

namespace macp {

namespace {

// Rank of the boundary map from k-faces to (k-1)-faces over GF(2), by
// column reduction with sparse sorted columns. Columns in `skip` are
// known to reduce to zero. Returns the rank and marks the pivot rows.
long long boundary_rank(const SimplicialComplex& complex, int k, const std::vector<bool>& skip,
                        std::vector<bool>& pivot_rows) {
  const auto& cols = complex.faces(k);
  const auto& rows = complex.faces(k - 1);
  std::vector<long long> owner(rows.size(), -1);
  std::vector<std::vector<long long>> reduced;
  long long rank = 0;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (!skip.empty() && skip[j]) continue;
    std::vector<long long> col;
    const Simplex& s = cols[j];
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      Simplex f = s;
      f.erase(f.begin() + static_cast<std::ptrdiff_t>(drop));
      col.push_back(complex.index_of(f));
    }
    std::sort(col.begin(), col.end());
    while (!col.empty() && owner[static_cast<std::size_t>(col.back())] >= 0) {
      const auto& other = reduced[static_cast<std::size_t>(owner[static_cast<std::size_t>(col.back())])];
      std::vector<long long> sum;
      std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(), std::back_inserter(sum));
      col = std::move(sum);
    }
    if (col.empty()) continue;
    owner[static_cast<std::size_t>(col.back())] = static_cast<long long>(reduced.size());
    pivot_rows[static_cast<std::size_t>(col.back())] = true;
    reduced.push_back(std::move(col));
    ++rank;
  }
  return rank;
}

}  // namespace

long long euler_characteristic(const SimplicialComplex& k) {
  long long chi = 0;
  const auto f = k.f_vector();
  for (std::size_t d = 0; d < f.size(); ++d) chi += (d % 2 == 0 ? 1 : -1) * f[d];
  return chi;
}

BettiProfile betti_gf2(const SimplicialComplex& k) {
  BettiProfile out;
  out.f_vector = k.f_vector();
  out.euler = euler_characteristic(k);
  const int top = k.dimension();
  if (top < 0) {
    out.euler_consistent = out.euler == 0;
    return out;
  }
  // rank[d] = rank of the boundary from d-faces; rank[0] = 0.
  std::vector<long long> rank(static_cast<std::size_t>(top + 2), 0);
  std::vector<bool> skip;  // columns of the current dimension cleared by the one above
  for (int d = top; d >= 1; --d) {
    std::vector<bool> pivots(k.faces(d - 1).size(), false);
    rank[static_cast<std::size_t>(d)] = boundary_rank(k, d, skip, pivots);
    skip = std::move(pivots);
  }
  long long alternating = 0;
  for (int d = 0; d <= top; ++d) {
    const long long b = out.f_vector[static_cast<std::size_t>(d)] - rank[static_cast<std::size_t>(d)] -
                        rank[static_cast<std::size_t>(d + 1)];
    out.betti.push_back(b);
    alternating += (d % 2 == 0 ? 1 : -1) * b;
  }
  out.euler_consistent = alternating == out.euler;
  return out;
}

bool is_sphere_profile(const SimplicialComplex& k, int d) {
  if (k.empty() || k.dimension() != d || !k.is_pure()) return false;
  const BettiProfile profile = betti_gf2(k);
  std::vector<long long> expected(static_cast<std::size_t>(d + 1), 0);
  expected[0] += 1;
  expected[static_cast<std::size_t>(d)] += 1;
  if (profile.betti != expected || !profile.euler_consistent) return false;
  if (d == 0) return k.faces(0).size() == 2;
  std::vector<int> incidence(k.faces(d - 1).size(), 0);
  for (const auto& s : k.faces(d))
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      Simplex f = s;
      f.erase(f.begin() + static_cast<std::ptrdiff_t>(drop));
      ++incidence[static_cast<std::size_t>(k.index_of(f))];
    }
  return std::all_of(incidence.begin(), incidence.end(), [](int c) { return c == 2; });
}

}  // namespace macp
