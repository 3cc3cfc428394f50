#pragma once
// Independent reference computations shared by the unit and acceptance
// tests. Nothing here calls into the code under test except for plain
// data types.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "macp/oriented_matroid.hpp"
#include "macp/rational.hpp"
#include "macp/sign_vector.hpp"

namespace oracle {

using macp::Sign;

// Every nonzero alternating sign map on pairs of [n] satisfying the
// three-term Grassmann-Pluecker relations on all 4-subsets. Both chi and
// -chi are listed.
inline std::vector<macp::Chirotope2> gp_chirotopes(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<macp::Chirotope2> out;
  std::vector<int> digits(pairs.size(), 0);
  const auto value = [&](int i, int j) {
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (pairs[k] == std::pair{i, j}) return digits[k] - 1;
    return 0;
  };
  while (true) {
    const bool nonzero = std::any_of(digits.begin(), digits.end(), [](int d) { return d != 1; });
    bool ok = nonzero;
    for (int a = 0; ok && a < n; ++a)
      for (int b = a + 1; ok && b < n; ++b)
        for (int c = b + 1; ok && c < n; ++c)
          for (int d = c + 1; ok && d < n; ++d) {
            const int t[3] = {value(a, b) * value(c, d), -value(a, c) * value(b, d), value(a, d) * value(b, c)};
            const bool pos = std::count(t, t + 3, 1) > 0;
            const bool neg = std::count(t, t + 3, -1) > 0;
            ok = pos == neg;
          }
    if (ok) {
      macp::Chirotope2 chi(n);
      for (std::size_t k = 0; k < pairs.size(); ++k)
        chi.set(pairs[k].first, pairs[k].second, static_cast<Sign>(digits[k] - 1));
      out.push_back(chi);
    }
    std::size_t k = 0;
    while (k < digits.size() && digits[k] == 2) digits[k++] = 0;
    if (k == digits.size()) break;
    ++digits[k];
  }
  return out;
}

// Mod-2 Betti numbers of the real Grassmannian Gr(2, n). Its Schubert cells
// are indexed by Young diagrams in a 2 x (n-2) box, with one cell of
// dimension |lambda| per diagram. The cellular incidence numbers of real
// Grassmannians are 0 or +-2, so the mod-2 differential vanishes and b_k
// counts the diagrams with k boxes.
inline std::vector<long long> schubert_betti(int n) {
  const int m = n - 2;
  std::vector<long long> b(static_cast<std::size_t>(2 * m + 1), 0);
  for (int l1 = 0; l1 <= m; ++l1)
    for (int l2 = 0; l2 <= l1; ++l2) ++b[static_cast<std::size_t>(l1 + l2)];
  return b;
}

// Mod-2 Betti numbers of the d-sphere.
inline std::vector<long long> sphere_betti(int d) {
  std::vector<long long> b(static_cast<std::size_t>(d + 1), 0);
  b[0] += 1;
  b[static_cast<std::size_t>(d)] += 1;
  return b;
}

// Covectors of a planar vector configuration, read off by sweeping a
// functional u around the circle: u runs over the critical directions
// (perpendicular to some vector) and the sums of any two non-opposite
// critical directions, which reach every open sector.
inline std::vector<macp::SignVector> sweep_covectors(const macp::VectorConfig& v) {
  const int n = static_cast<int>(v.size());
  std::vector<macp::Vec2> critical;
  for (const auto& w : v)
    if (w.x != 0 || w.y != 0) {
      critical.push_back({-w.y, w.x});
      critical.push_back({w.y, -w.x});
    }
  std::vector<macp::Vec2> directions{{0, 0}};
  for (const auto& c : critical) directions.push_back(c);
  for (std::size_t a = 0; a < critical.size(); ++a)
    for (std::size_t b = a + 1; b < critical.size(); ++b) {
      macp::Vec2 s{critical[a].x + critical[b].x, critical[a].y + critical[b].y};
      if (s.x != 0 || s.y != 0) directions.push_back(s);
    }
  std::set<macp::SignVector> found;
  for (const auto& u : directions) {
    macp::SignVector x(n);
    for (int i = 0; i < n; ++i) x.set(i, macp::sign_of(macp::dot(u, v[static_cast<std::size_t>(i)])));
    found.insert(x);
  }
  return {found.begin(), found.end()};
}

// Literal weak-map order on covector sets: every covector of a lies
// componentwise below some covector of b.
inline bool dominated(const std::vector<macp::SignVector>& a, const std::vector<macp::SignVector>& b) {
  return std::all_of(a.begin(), a.end(), [&](const macp::SignVector& x) {
    return std::any_of(b.begin(), b.end(), [&](const macp::SignVector& y) { return x.is_below(y); });
  });
}

// Longest chain ending at each element of a relation given by leq on
// [0, size); elements are visited in order of their down-set sizes.
inline std::vector<int> longest_chain_heights(int size, const std::function<bool(int, int)>& leq) {
  std::vector<int> below(static_cast<std::size_t>(size), 0), order(static_cast<std::size_t>(size));
  for (int x = 0; x < size; ++x) {
    order[static_cast<std::size_t>(x)] = x;
    for (int y = 0; y < size; ++y) below[static_cast<std::size_t>(x)] += leq(y, x);
  }
  std::sort(order.begin(), order.end(), [&](int a, int b) { return below[static_cast<std::size_t>(a)] < below[static_cast<std::size_t>(b)]; });
  std::vector<int> h(static_cast<std::size_t>(size), 0);
  for (int y : order)
    for (int x = 0; x < size; ++x)
      if (x != y && leq(x, y)) h[static_cast<std::size_t>(y)] = std::max(h[static_cast<std::size_t>(y)], h[static_cast<std::size_t>(x)] + 1);
  return h;
}

}  // namespace oracle
