#include "macp/flags.hpp"

#include <algorithm>
#include <bit>

namespace macp {

namespace {

std::size_t idx(int x) { return static_cast<std::size_t>(x); }

bool is_tope(const Rank2OM& m, const SignVector& z) {
  const std::uint32_t nonloops = ((1u << m.size()) - 1u) & ~m.loop_mask();
  return z.support() == nonloops;
}

// Directions of the class lines in angular order within [0, pi).
std::vector<Vec2> class_directions(const VectorConfig& v) {
  const auto pos = line_positions(v);
  const int p = pos.empty() ? 0 : *std::max_element(pos.begin(), pos.end()) + 1;
  std::vector<Vec2> dir(idx(p));
  for (std::size_t e = 0; e < v.size(); ++e) {
    if (pos[e] < 0) continue;
    Vec2 d = v[e];
    if (d.y < 0 || (d.y == 0 && d.x < 0)) d = {-d.x, -d.y};
    dir[idx(pos[e])] = d;
  }
  return dir;
}

SignVector covector_of_line(const Vec2& u, const VectorConfig& v) {
  SignVector z(static_cast<int>(v.size()));
  for (std::size_t e = 0; e < v.size(); ++e) z.set(static_cast<int>(e), sign_of(det(u, v[e])));
  return z;
}

// Line direction realizing +-z; a tope arc is entered at weights (a, b).
Vec2 line_for(const VectorConfig& v, const SignVector& z, const Rational& a, const Rational& b, int* slot) {
  const auto dir = class_directions(v);
  const int p = static_cast<int>(dir.size());
  auto matches = [&](const Vec2& u) {
    const SignVector w = covector_of_line(u, v);
    return w == z || w == -z;
  };
  for (int k = 0; k < p; ++k) {
    if (matches(dir[idx(k)])) {
      if (slot) *slot = 2 * k;
      return dir[idx(k)];
    }
    const Vec2 next = k + 1 < p ? dir[idx(k + 1)] : Vec2{-dir[0].x, -dir[0].y};
    const Vec2 u{a * dir[idx(k)].x + b * next.x, a * dir[idx(k)].y + b * next.y};
    if (matches(u)) {
      if (slot) *slot = 2 * k + 1;
      return u;
    }
  }
  throw NotContained("sign vector " + z.str() + " is not a covector of the realization");
}

Matrix row_from_line(const Vec2& u, const VectorConfig& v) {
  Matrix y(1, static_cast<int>(v.size()));
  for (std::size_t e = 0; e < v.size(); ++e) y.at(0, static_cast<int>(e)) = det(u, v[e]);
  return y;
}

// Chirotope on [n+1] from a representative on [n] and the new row w.
Rank2OM extend(const Chirotope2& rep, const SignVector& w) {
  const int n = rep.size();
  if (n + 1 > kMaxGroundSet) throw LimitExceeded("embedding exceeds the supported ground set");
  Chirotope2 chi(n + 1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) chi.set(i, j, rep(i, j));
  for (int i = 0; i < n; ++i) chi.set(n, i, w[i]);
  try {
    return canonical_form(chi);
  } catch (const InvalidChirotope& e) {
    throw InvalidFlag(std::string("embedding is not a chirotope: ") + e.what());
  }
}

}  // namespace

// ---------------------------------------------------------------- FlagOM

FlagOM::FlagOM(Rank1OM n, Rank2OM m) : n_(std::move(n)), m_(std::move(m)) {
  if (n_.size() != m_.size()) throw InvalidFlag("flag parts live on different ground sets");
  if (!is_strong_image(n_, m_)) throw InvalidFlag(n_.str() + " is not a covector of " + m_.key());
  key_ = "flag;z=" + n_.str() + ";M=" + m_.key();
}

FlagOM FlagOM::parse(std::string_view text) {
  constexpr std::string_view head = "flag;z=";
  if (text.substr(0, head.size()) != head) throw ParseError("flag text must start with 'flag;z='");
  const auto semi = text.find(';', head.size());
  if (semi == std::string_view::npos || text.substr(semi, 3) != ";M=") throw ParseError("flag text needs ';M='");
  const SignVector z = SignVector::parse(text.substr(head.size(), semi - head.size()));
  const Rank2OM m = Rank2OM::parse(text.substr(semi + 3));
  if (z.size() != m.size()) throw ParseError("flag covector has the wrong length");
  if (z.is_zero()) throw ParseError("flag covector must be nonzero");
  try {
    return FlagOM(Rank1OM(z), m);
  } catch (const InvalidFlag& e) {
    throw ParseError(e.what());
  }
}

// ---------------------------------------------------------------- rank 1

bool is_strong_image(const Rank1OM& n, const Rank2OM& m) {
  const auto cov = covectors(m);
  return std::binary_search(cov.begin(), cov.end(), n.covector());
}

bool rank1_leq(const Rank1OM& a, const Rank1OM& b) {
  return a.covector().is_below(b.covector()) || a.covector().is_below(-b.covector());
}

int rank1_height(const Rank2OM& m, const SignVector& z) { return is_tope(m, z) ? 1 : 0; }

int flag_rank(const FlagOM& f) { return rank_h(f.M()) + rank1_height(f.M(), f.z()); }

G1Poset rank1_images(const Rank2OM& m) {
  G1Poset g;
  g.m = m;
  for (const auto& z : covectors(m))
    if (!z.is_zero()) g.elements.emplace_back(z);
  std::sort(g.elements.begin(), g.elements.end());
  g.elements.erase(std::unique(g.elements.begin(), g.elements.end()), g.elements.end());
  std::vector<std::string> labels;
  for (const auto& e : g.elements) labels.push_back(e.str());
  const auto& el = g.elements;
  g.poset = Poset::build(std::move(labels), [&](int a, int b) { return rank1_leq(el[idx(a)], el[idx(b)]); }, 1);
  g.height = *height_ranks(g.poset);
  return g;
}

SignVector max_covector_below(const Rank2OM& m1, const SignVector& z2) {
  if (z2.size() != m1.size()) throw std::invalid_argument("ground sets differ");
  std::vector<SignVector> below;
  for (const auto& z : covectors(m1))
    if (!z.is_zero() && z.is_below(z2)) below.push_back(z);
  if (below.empty()) throw EmptyBelowSet("no nonzero covector of " + m1.key() + " lies below " + z2.str());
  std::vector<SignVector> maximal;
  for (const auto& z : below)
    if (std::none_of(below.begin(), below.end(), [&](const SignVector& w) { return w != z && z.is_below(w); }))
      maximal.push_back(z);
  if (maximal.size() != 1)
    throw NonUniqueMax(std::to_string(maximal.size()) + " maximal covectors of " + m1.key() + " below " + z2.str());
  return maximal.front();
}

FlagOM nu(const Matrix& y, const Matrix& x) {
  if (y.rows() != 1 || x.rows() != 2 || y.cols() != x.cols()) throw RankDeficient("expected a 1 x n and a 2 x n matrix");
  if (rank(x) != 2) throw RankDeficient("plane matrix has rank below 2");
  if (rank(y) != 1) throw RankDeficient("line matrix is zero");
  Matrix stacked(3, x.cols());
  for (int j = 0; j < x.cols(); ++j) {
    stacked.at(0, j) = x.at(0, j);
    stacked.at(1, j) = x.at(1, j);
    stacked.at(2, j) = y.at(0, j);
  }
  if (rank(stacked) != 2) throw NotContained("line is not contained in the plane");
  SignVector z(y.cols());
  for (int j = 0; j < y.cols(); ++j) z.set(j, sign_of(y.at(0, j)));
  return FlagOM(Rank1OM(z), mu(x));
}

SignVector iota_sign_choice(const FlagOM& flag, const std::optional<SignVector>& anchor) {
  const SignVector& z = flag.z();
  if (anchor) {
    if (anchor->is_below(z)) return z;
    if (anchor->is_below(-z)) return -z;
    throw InvalidFlag("anchor " + anchor->str() + " is not below +-" + z.str());
  }
  if (z[0] != Sign::Zero) return z[0] == Sign::Neg ? z : -z;
  return z[1] == Sign::Pos ? z : -z;
}

Rank2OM iota_embed(const FlagOM& flag, const std::optional<SignVector>& anchor) {
  const Rank2OM& m = flag.M();
  if (m.size() < 2 || m.chi(0, 1) == Sign::Zero) throw InvalidFlag("{1,2} is not a basis of " + m.key());
  const Chirotope2 rep = m.chi(0, 1) == Sign::Pos ? m.chirotope() : -m.chirotope();
  return extend(rep, iota_sign_choice(flag, anchor));
}

// ---------------------------------------------------------------- MacP(1,2,n)

int MacP12Poset::index_of(const FlagOM& f) const {
  const auto it = index.find(f.key());
  if (it == index.end()) throw ElementNotFound("not an element of MacP(1,2," + std::to_string(n) + "): " + f.key());
  return it->second;
}

std::vector<long long> MacP12Poset::f_vector() const {
  std::vector<long long> f;
  for (int r : rank) {
    if (idx(r) >= f.size()) f.resize(idx(r) + 1, 0);
    ++f[idx(r)];
  }
  return f;
}

bool flag_leq(const FlagOM& a, const FlagOM& b) {
  return weak_leq_chirotope(a.M(), b.M()) && rank1_leq(a.N(), b.N());
}

MacP12Poset enumerate_macp12(int n, const EnumerateOptions& options) {
  EnumerateOptions base_options = options;
  base_options.limit = std::min(options.limit, 5);
  MacP12Poset p;
  p.n = n;
  p.base = enumerate_macp2(n, base_options);
  std::vector<std::pair<FlagOM, int>> flags;
  for (std::size_t i = 0; i < p.base.elements.size(); ++i)
    for (const auto& z : rank1_images(p.base.elements[i]).elements)
      flags.emplace_back(FlagOM(z, p.base.elements[i]), static_cast<int>(i));
  std::sort(flags.begin(), flags.end(), [](const auto& a, const auto& b) {
    const int ra = flag_rank(a.first), rb = flag_rank(b.first);
    return ra != rb ? ra < rb : a.first.key() < b.first.key();
  });
  std::vector<std::string> labels;
  for (auto& [f, i] : flags) {
    p.index.emplace(f.key(), static_cast<int>(p.elements.size()));
    labels.push_back(f.key());
    p.rank.push_back(flag_rank(f));
    p.base_index.push_back(i);
    p.elements.push_back(std::move(f));
  }
  p.poset = Poset::build(
      std::move(labels),
      [&](int a, int b) {
        if (a == b) return true;
        if (p.rank[idx(a)] >= p.rank[idx(b)]) return false;
        if (!p.base.poset.leq(p.base_index[idx(a)], p.base_index[idx(b)])) return false;
        return rank1_leq(p.elements[idx(a)].N(), p.elements[idx(b)].N());
      },
      options.threads);
  return p;
}

std::vector<FlagOM> flag_covers(const MacP12Poset& p, const FlagOM& f) {
  std::vector<FlagOM> out;
  for (int c : p.poset.covers(p.index_of(f))) out.push_back(p.elements[idx(c)]);
  return out;
}

Poset flag_lower_interval(const MacP12Poset& p, const FlagOM& f) {
  const Bitset& down = p.poset.down_set(p.index_of(f));
  std::vector<int> below;
  for (auto i = down.find_first(); i != Bitset::npos; i = down.find_next(i)) below.push_back(static_cast<int>(i));
  return p.poset.induced(below).with_bottom("0^");
}

Poset enumerate_macp1(int n) {
  if (n < 1 || n > 8) throw LimitExceeded("MacP(1,n) supports 1 <= n <= 8");
  std::vector<Rank1OM> el;
  std::uint32_t full = (1u << n) - 1u;
  for (std::uint32_t support = 1; support <= full; ++support)
    for (std::uint32_t neg = support; ; neg = (neg - 1) & support) {
      const SignVector z(n, support & ~neg, neg);
      if (z[std::countr_zero(support)] == Sign::Pos) el.emplace_back(z);
      if (neg == 0) break;
    }
  std::sort(el.begin(), el.end());
  std::vector<std::string> labels;
  for (const auto& e : el) labels.push_back(e.str());
  return Poset::build(std::move(labels), [&](int a, int b) { return rank1_leq(el[idx(a)], el[idx(b)]); });
}

// ---------------------------------------------------------------- atom ordering

int line_slot_twice(const VectorConfig& realization, const SignVector& z) {
  int slot = -1;
  line_for(realization, z, 1, 1, &slot);
  return slot;
}

std::vector<FlagOM> flag_rao_ordering(const FlagOM& flag, const VectorConfig& realization) {
  const auto base = rao_ordering(flag.M(), realization);
  const auto pos = line_positions(realization);
  const int slot = line_slot_twice(realization, flag.z());
  std::vector<FlagOM> out;
  for (const auto& atom : base) {
    const SignVector star = max_covector_below(atom.atom, flag.z());
    if (star.support_size() == 1) {
      out.emplace_back(Rank1OM(star), atom.atom);
      continue;
    }
    SignVector zero_first = star, zero_second = star;
    zero_first.set(atom.first, Sign::Zero);
    zero_second.set(atom.second, Sign::Zero);
    const FlagOM at_first(Rank1OM(zero_first), atom.atom);
    const FlagOM at_second(Rank1OM(zero_second), atom.atom);
    if (slot <= 2 * pos[idx(atom.first)]) {
      out.push_back(at_first);
      out.push_back(at_second);
    } else {
      out.push_back(at_second);
      out.push_back(at_first);
    }
  }
  return out;
}

AtomOrdering to_atom_ordering(const Poset& p, const std::vector<FlagOM>& atoms) {
  AtomOrdering order;
  for (const auto& a : atoms) order.atoms.push_back(p.index_of(a.key()));
  return order;
}

// ---------------------------------------------------------------- cells

int flag_cell_dimension(const FlagOM& flag) {
  return cell_chart(flag.M()).dimension() + rank1_height(flag.M(), flag.z());
}

std::vector<std::pair<Matrix, Matrix>> sample_flag_cell(const FlagOM& flag, int count, std::uint64_t seed) {
  const auto planes = sample_cell(flag.M(), count, seed);
  std::vector<std::pair<Matrix, Matrix>> out;
  for (int s = 0; s < count; ++s) {
    const Matrix& x = planes[idx(s)];
    auto rng = make_stream(seed, flag.key(), static_cast<std::uint64_t>(s));
    const Rational a(1 + static_cast<long long>(rng() % 1024), 256);
    const Rational b(1 + static_cast<long long>(rng() % 1024), 256);
    const VectorConfig v = x.columns();
    Matrix y = row_from_line(line_for(v, flag.z(), a, b, nullptr), v);
    if (nu(y, x) != flag) throw std::logic_error("flag sampler left the cell of " + flag.key());
    out.emplace_back(std::move(y), x);
  }
  return out;
}

FlagBoundaryReport sample_flag_boundary(const FlagOM& flag, const FlagOM& face, int count, std::uint64_t seed) {
  if (!flag_leq(face, flag) || flag_rank(face) + 1 != flag_rank(flag))
    throw NotACoatom(face.key() + " is not covered by " + flag.key());
  // Compatible representatives: chi_face in {0, chi_flag} and w_face <= w_flag.
  const Chirotope2 big_rep = flag.M().chirotope();
  Chirotope2 small_rep = face.M().chirotope();
  if ((face.M().chi_positive() & ~flag.M().chi_positive()) != 0 ||
      (face.M().chi_negative() & ~flag.M().chi_negative()) != 0)
    small_rep = -small_rep;
  const SignVector w_small = face.z();
  const SignVector w_big = w_small.is_below(flag.z()) ? flag.z() : -flag.z();
  const Rank2OM big = extend(big_rep, w_big);
  const Rank2OM small = extend(small_rep, w_small);

  const BoundaryReport inner = sample_boundary(big, small, count, seed);
  auto split = [](const Matrix& wide) {
    VectorConfig v = wide.columns();
    const Vec2 u = v.back();
    v.pop_back();
    return std::make_pair(row_from_line(u, v), Matrix::from_columns(v));
  };
  FlagBoundaryReport report;
  for (const auto& wide : inner.samples) {
    auto sample = split(wide);
    if (nu(sample.first, sample.second) != face) throw std::logic_error("face sample left the cell of " + face.key());
    for (int k = 1; k <= kBoundarySteps; ++k) {
      ++report.perturbations;
      try {
        const auto [y, x] = split(perturb_into_cell(big, small, wide, k));
        if (nu(y, x) != flag) ++report.failures;
      } catch (const MathError&) {
        ++report.failures;
      }
    }
    report.samples.push_back(std::move(sample));
  }
  return report;
}

}  // namespace macp
