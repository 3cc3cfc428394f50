#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "macp/macphersonian.hpp"

namespace macp {

namespace {

std::size_t idx(int x) { return static_cast<std::size_t>(x); }

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

// Rational in (0, 4) on a 2^-14 grid.
Rational draw_slope(std::mt19937_64& rng) { return Rational(1 + static_cast<long long>(rng() % 65535), 16384); }

// Rational in (0, 2] on a 2^-9 grid.
Rational draw_radius(std::mt19937_64& rng) { return Rational(1 + static_cast<long long>(rng() % 1024), 512); }

std::vector<Rational> draw_distinct(std::mt19937_64& rng, int count) {
  std::set<Rational> values;
  while (static_cast<int>(values.size()) < count) values.insert(draw_slope(rng));
  return {values.begin(), values.end()};  // ascending
}

ParallelClass flipped(ParallelClass c) {
  for (auto& e : c) e.sign = -e.sign;
  return c;
}

}  // namespace

std::mt19937_64 make_stream(std::uint64_t seed, const std::string& key, std::uint64_t index) {
  const std::uint64_t h = fnv1a(key);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(h),    static_cast<std::uint32_t>(h >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

CellChart cell_chart(const Rank2OM& m) {
  CellChart chart;
  chart.om = m;
  chart.classes = m.classes();  // canonical: first class holds the smallest non-loop with sign +
  chart.basis_first = chart.classes.front().front().element;
  chart.basis_second = m.size();
  for (std::size_t k = 1; k < chart.classes.size(); ++k)
    for (const auto& e : chart.classes[k]) chart.basis_second = std::min(chart.basis_second, e.element);
  if (m.orientation(chart.basis_second) == Sign::Neg) {
    std::vector<ParallelClass> alt{chart.classes.front()};
    for (std::size_t k = chart.classes.size() - 1; k >= 1; --k) alt.push_back(flipped(chart.classes[k]));
    chart.classes = std::move(alt);
  }
  const int p = static_cast<int>(chart.classes.size());
  for (int k = 0; k < p; ++k)
    for (const auto& e : chart.classes[idx(k)])
      if (e.element == chart.basis_second) chart.basis_second_class = k;
  chart.lower_block = chart.basis_second_class - 1;
  chart.upper_block = p - 1 - chart.basis_second_class;
  chart.radii = m.num_nonloops() - 2;
  return chart;
}

std::vector<Matrix> sample_cell(const Rank2OM& m, int count, std::uint64_t seed) {
  const CellChart chart = cell_chart(m);
  const int p = static_cast<int>(chart.classes.size());
  const int q = chart.basis_second_class;
  std::vector<Matrix> out;
  for (int s = 0; s < count; ++s) {
    auto rng = make_stream(seed, m.key(), static_cast<std::uint64_t>(s));
    // Directions: e1, then slopes decreasing through the (0, pi/2) block,
    // e2, then negative slopes decreasing through the (pi/2, pi) block.
    std::vector<Vec2> dir(idx(p));
    dir[0] = {1, 0};
    dir[idx(q)] = {0, 1};
    const auto lower = draw_distinct(rng, chart.lower_block);
    for (int k = 1; k < q; ++k) dir[idx(k)] = {lower[idx(q - 1 - k)], 1};
    const auto upper = draw_distinct(rng, chart.upper_block);
    for (int k = q + 1; k < p; ++k) dir[idx(k)] = {-upper[idx(k - q - 1)], 1};

    std::vector<int> class_of(idx(m.size()), -1);
    std::vector<Sign> sigma(idx(m.size()), Sign::Zero);
    for (int k = 0; k < p; ++k)
      for (const auto& e : chart.classes[idx(k)]) {
        class_of[idx(e.element)] = k;
        sigma[idx(e.element)] = e.sign;
      }
    Matrix x(2, m.size());
    for (int e = 0; e < m.size(); ++e) {
      const int k = class_of[idx(e)];
      if (k < 0) continue;
      Rational r = 1;
      if (e != chart.basis_first && e != chart.basis_second) r = draw_radius(rng);
      if (sigma[idx(e)] == Sign::Neg) r = -r;
      x.at(0, e) = r * dir[idx(k)].x;
      x.at(1, e) = r * dir[idx(k)].y;
    }
    if (mu(x) != m) throw std::logic_error("cell sampler left the cell of " + m.key());
    out.push_back(std::move(x));
  }
  return out;
}

Matrix perturb_into_cell(const Rank2OM& m, const Rank2OM& face, const Matrix& face_point, int k) {
  const Rational eps = Rational(1, boost::multiprecision::cpp_int(1) << k);
  VectorConfig v = face_point.columns();
  const int n = m.size();
  if (face.loop_mask() != m.loop_mask()) {
    // A class member collapsed to zero: re-inflate it along a class mate.
    const int i = std::countr_zero(face.loop_mask() & ~m.loop_mask());
    int j = -1;
    for (const auto& e : m.classes()[idx(m.class_index(i))])
      if (e.element != i) { j = e.element; break; }
    const Rational s = m.orientation(i) == m.orientation(j) ? eps : -eps;
    v[idx(i)] = {s * v[idx(j)].x, s * v[idx(j)].y};
    return Matrix::from_columns(v);
  }
  // Two adjacent classes merged: rotate one of them slightly.
  int a = -1, b = -1;
  for (int i = 0; i < n && a < 0; ++i)
    for (int j = 0; j < n; ++j)
      if (m.chi(i, j) != Sign::Zero && face.chi(i, j) == Sign::Zero) { a = i; b = j; break; }
  if (a < 0) throw NotACoatom(face.key() + " merges no classes of " + m.key());
  Sign tau = Sign::Zero;
  for (int i = 0; i < n && tau == Sign::Zero; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Sign here = sign_of(det(v[idx(i)], v[idx(j)]));
      if (here != Sign::Zero && m.chi(i, j) != Sign::Zero) { tau = here * m.chi(i, j); break; }
    }
  const Sign s = tau * m.chi(a, b) * sign_of(dot(v[idx(a)], v[idx(b)]));
  // Keep the rotation well inside the angular gap to every other line.
  Rational eta = 1;
  for (int c = 0; c < n; ++c) {
    const Rational d = det(v[idx(b)], v[idx(c)]);
    const Rational t = dot(v[idx(b)], v[idx(c)]);
    if (d == 0 || t == 0) continue;
    const Rational gap = abs(d) / abs(t) / 2;
    if (gap < eta) eta = gap;
  }
  const Rational step = (s == Sign::Pos ? eps : -eps) * eta;
  const int cb = m.class_index(b);
  for (int e = 0; e < n; ++e)
    if (m.class_index(e) == cb) {
      const Vec2 w = v[idx(e)];
      v[idx(e)] = {w.x - step * w.y, w.y + step * w.x};
    }
  return Matrix::from_columns(v);
}

BoundaryReport sample_boundary(const Rank2OM& m, const Rank2OM& face, int count, std::uint64_t seed) {
  const auto faces = coatoms_CR(m);
  if (!std::binary_search(faces.begin(), faces.end(), face))
    throw NotACoatom(face.key() + " is not covered by " + m.key());
  BoundaryReport report;
  report.samples = sample_cell(face, count, seed);
  for (const auto& x : report.samples)
    for (int k = 1; k <= kBoundarySteps; ++k) {
      ++report.perturbations;
      try {
        if (mu(perturb_into_cell(m, face, x, k)) != m) ++report.failures;
      } catch (const RankDeficient&) {
        ++report.failures;
      }
    }
  return report;
}

}  // namespace macp
