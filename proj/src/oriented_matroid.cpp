#include "macp/oriented_matroid.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace macp {

namespace {

void check_ground_set(int n) {
  if (n < 1 || n > kMaxGroundSet)
    throw LimitExceeded("ground set size " + std::to_string(n) + " outside [1, " +
                        std::to_string(kMaxGroundSet) + "]");
}

int parse_int(std::string_view s, const char* what) {
  int value = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || ptr != end) throw ParseError(std::string("invalid ") + what + " '" + std::string(s) + "'");
  return value;
}

std::string_view expect_prefix(std::string_view s, std::string_view prefix) {
  if (s.substr(0, prefix.size()) != prefix)
    throw ParseError("expected '" + std::string(prefix) + "' in '" + std::string(s) + "'");
  return s.substr(prefix.size());
}

// Total order used to pick the canonical representative: class by class,
// element by element, with + before -.
bool lex_less(const std::vector<ParallelClass>& a, const std::vector<ParallelClass>& b) {
  auto cmp_class = [](const ParallelClass& x, const ParallelClass& y) {
    const std::size_t m = std::min(x.size(), y.size());
    for (std::size_t i = 0; i < m; ++i) {
      if (x[i].sign != y[i].sign) return x[i].sign == Sign::Pos ? -1 : 1;
      if (x[i].element != y[i].element) return x[i].element < y[i].element ? -1 : 1;
    }
    return x.size() == y.size() ? 0 : (x.size() < y.size() ? -1 : 1);
  };
  for (std::size_t k = 0; k < a.size() && k < b.size(); ++k) {
    const int c = cmp_class(a[k], b[k]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

ParallelClass flipped(ParallelClass c) {
  for (auto& e : c) e.sign = -e.sign;
  return c;
}

}  // namespace

// ---------------------------------------------------------------- Chirotope2

Chirotope2::Chirotope2(int n) : n_(n), upper_(static_cast<std::size_t>(n * (n - 1) / 2), Sign::Zero) {
  if (n < 0 || n > 64) throw LimitExceeded("chirotope size out of range");
}

Chirotope2 Chirotope2::parse(std::string_view text) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) throw ParseError("chirotope text needs 'n=<n>;chi=<word>'");
  const int n = parse_int(expect_prefix(text.substr(0, semi), "n="), "ground set size");
  const std::string_view word = expect_prefix(text.substr(semi + 1), "chi=");
  Chirotope2 chi(n);
  if (word.size() != chi.upper_.size()) throw ParseError("chirotope word has the wrong length");
  for (std::size_t k = 0; k < word.size(); ++k) chi.upper_[k] = sign_from_char(word[k]);
  return chi;
}

Sign Chirotope2::operator()(int i, int j) const {
  if (i == j) return Sign::Zero;
  if (i < j) return upper_[static_cast<std::size_t>(pair_index(n_, i, j))];
  return -upper_[static_cast<std::size_t>(pair_index(n_, j, i))];
}

void Chirotope2::set(int i, int j, Sign s) {
  if (i == j) throw std::invalid_argument("chirotope diagonal is fixed at zero");
  if (i < j)
    upper_[static_cast<std::size_t>(pair_index(n_, i, j))] = s;
  else
    upper_[static_cast<std::size_t>(pair_index(n_, j, i))] = -s;
}

bool Chirotope2::is_zero() const {
  return std::all_of(upper_.begin(), upper_.end(), [](Sign s) { return s == Sign::Zero; });
}

Chirotope2 Chirotope2::operator-() const {
  Chirotope2 out = *this;
  for (auto& s : out.upper_) s = -s;
  return out;
}

std::string Chirotope2::str() const {
  std::string word;
  for (Sign s : upper_) word.push_back(to_char(s));
  return "n=" + std::to_string(n_) + ";chi=" + word;
}

// ---------------------------------------------------------------- Rank2OM

Rank2OM Rank2OM::from_classes(int n, std::vector<ParallelClass> classes) {
  check_ground_set(n);
  if (classes.size() < 2) throw InvalidChirotope("a rank-2 oriented matroid needs at least two classes");
  std::uint32_t seen = 0;
  for (auto& c : classes) {
    if (c.empty()) throw InvalidChirotope("empty parallel class");
    for (const auto& e : c) {
      if (e.element < 0 || e.element >= n) throw InvalidChirotope("class element out of range");
      if (e.sign == Sign::Zero) throw InvalidChirotope("class element without orientation");
      if ((seen >> e.element) & 1u) throw InvalidChirotope("element listed twice");
      seen |= 1u << e.element;
    }
    std::sort(c.begin(), c.end(), [](const SignedElement& a, const SignedElement& b) { return a.element < b.element; });
  }

  // Rotate the class of the smallest non-loop to the front.
  const int e0 = std::countr_zero(seen);
  std::size_t k0 = 0;
  while (classes[k0].front().element != e0) ++k0;
  std::vector<ParallelClass> rep;
  rep.reserve(classes.size());
  for (std::size_t k = k0; k < classes.size(); ++k) rep.push_back(classes[k]);
  for (std::size_t k = 0; k < k0; ++k) rep.push_back(flipped(classes[k]));
  if (rep.front().front().sign == Sign::Neg)
    for (auto& c : rep) c = flipped(c);

  // The other group elements fixing (class(e0) first, sigma_e0 = +) give
  // the reversed order with the tail flipped.
  std::vector<ParallelClass> alt;
  alt.push_back(rep.front());
  for (std::size_t k = rep.size() - 1; k >= 1; --k) alt.push_back(flipped(rep[k]));
  if (lex_less(alt, rep)) rep = std::move(alt);

  Rank2OM om;
  om.n_ = n;
  om.loops_ = ((n == 32 ? 0u : (1u << n)) - 1u) & ~seen;
  om.classes_ = std::move(rep);
  om.rebuild_caches();
  return om;
}

void Rank2OM::rebuild_caches() {
  class_of_.assign(static_cast<std::size_t>(n_), -1);
  sigma_.assign(static_cast<std::size_t>(n_), Sign::Zero);
  for (std::size_t k = 0; k < classes_.size(); ++k)
    for (const auto& e : classes_[k]) {
      class_of_[static_cast<std::size_t>(e.element)] = static_cast<int>(k);
      sigma_[static_cast<std::size_t>(e.element)] = e.sign;
    }
  chi_pos_ = chi_neg_ = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      const int ci = class_of_[static_cast<std::size_t>(i)];
      const int cj = class_of_[static_cast<std::size_t>(j)];
      if (ci < 0 || cj < 0 || ci == cj) continue;
      const Sign s = sigma_[static_cast<std::size_t>(i)] * sigma_[static_cast<std::size_t>(j)] *
                     (cj > ci ? Sign::Pos : Sign::Neg);
      const std::uint64_t bit = std::uint64_t{1} << pair_index(n_, i, j);
      (s == Sign::Pos ? chi_pos_ : chi_neg_) |= bit;
    }

  std::string key = "n=" + std::to_string(n_) + ";loops=";
  bool first = true;
  for (int i = 0; i < n_; ++i)
    if (is_loop(i)) {
      if (!first) key += ',';
      key += std::to_string(i + 1);
      first = false;
    }
  key += ";classes=";
  for (const auto& c : classes_) {
    key += '[';
    for (std::size_t t = 0; t < c.size(); ++t) {
      if (t) key += ' ';
      key += to_char(c[t].sign);
      key += std::to_string(c[t].element + 1);
    }
    key += ']';
  }
  key_ = std::move(key);
}

Rank2OM Rank2OM::parse(std::string_view text) {
  const auto s1 = text.find(';');
  const auto s2 = s1 == std::string_view::npos ? s1 : text.find(';', s1 + 1);
  if (s2 == std::string_view::npos) throw ParseError("oriented matroid text needs 'n=..;loops=..;classes=..'");
  const int n = parse_int(expect_prefix(text.substr(0, s1), "n="), "ground set size");
  if (n < 1 || n > kMaxGroundSet) throw ParseError("ground set size out of range");
  const std::string_view loops_text = expect_prefix(text.substr(s1 + 1, s2 - s1 - 1), "loops=");
  std::string_view rest = expect_prefix(text.substr(s2 + 1), "classes=");

  std::uint32_t loops = 0;
  if (!loops_text.empty()) {
    std::size_t pos = 0;
    while (pos <= loops_text.size()) {
      const auto comma = std::min(loops_text.find(',', pos), loops_text.size());
      const int e = parse_int(loops_text.substr(pos, comma - pos), "loop element");
      if (e < 1 || e > n) throw ParseError("loop element out of range");
      loops |= 1u << (e - 1);
      pos = comma + 1;
    }
  }

  std::vector<ParallelClass> classes;
  while (!rest.empty()) {
    if (rest.front() != '[') throw ParseError("expected '[' in class list");
    const auto close = rest.find(']');
    if (close == std::string_view::npos) throw ParseError("unterminated class");
    std::string_view body = rest.substr(1, close - 1);
    ParallelClass c;
    while (!body.empty()) {
      const auto space = std::min(body.find(' '), body.size());
      const std::string_view token = body.substr(0, space);
      if (token.size() < 2) throw ParseError("invalid class token '" + std::string(token) + "'");
      const Sign s = sign_from_char(token.front());
      if (s == Sign::Zero) throw ParseError("class token needs an explicit sign");
      const int e = parse_int(token.substr(1), "class element");
      if (e < 1 || e > n) throw ParseError("class element out of range");
      c.push_back({e - 1, s});
      body = space < body.size() ? body.substr(space + 1) : std::string_view{};
    }
    classes.push_back(std::move(c));
    rest = rest.substr(close + 1);
  }

  std::uint32_t covered = 0;
  for (const auto& c : classes)
    for (const auto& e : c) covered |= 1u << e.element;
  if ((covered & loops) != 0 || (covered | loops) != (1u << n) - 1u)
    throw ParseError("loops and classes must partition the ground set");
  try {
    return from_classes(n, std::move(classes));
  } catch (const InvalidChirotope& e) {
    throw ParseError(e.what());
  }
}

int Rank2OM::num_nonloops() const { return n_ - std::popcount(loops_); }

std::vector<int> Rank2OM::loops() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i)
    if (is_loop(i)) out.push_back(i);
  return out;
}

Sign Rank2OM::chi(int i, int j) const {
  if (i == j) return Sign::Zero;
  const bool swap = i > j;
  const std::uint64_t bit = std::uint64_t{1} << pair_index(n_, std::min(i, j), std::max(i, j));
  Sign s = (chi_pos_ & bit) ? Sign::Pos : (chi_neg_ & bit) ? Sign::Neg : Sign::Zero;
  return swap ? -s : s;
}

Chirotope2 Rank2OM::chirotope() const {
  Chirotope2 out(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) out.set(i, j, chi(i, j));
  return out;
}

Rank2OM Rank2OM::with_corrupted_orientation(int element) const {
  if (is_loop(element)) throw LoopElement("cannot corrupt the orientation of a loop");
  Rank2OM out = *this;
  out.sigma_[static_cast<std::size_t>(element)] = -out.sigma_[static_cast<std::size_t>(element)];
  for (auto& c : out.classes_)
    for (auto& e : c)
      if (e.element == element) e.sign = -e.sign;
  return out;
}

// ---------------------------------------------------------------- Rank1OM

Rank1OM::Rank1OM(SignVector z) : z_(z) {
  if (z.is_zero()) throw RankDeficient("a rank-1 oriented matroid needs a nonzero covector");
  const int first = std::countr_zero(z.support());
  if (z[first] == Sign::Neg) z_ = -z;
}

// ---------------------------------------------------------------- operations

Chirotope2 chirotope_from_vectors(const VectorConfig& config) {
  const int n = static_cast<int>(config.size());
  if (n < 2) throw RankDeficient("need at least two vectors");
  if (n > kMaxGroundSet) throw LimitExceeded("too many vectors");
  Chirotope2 chi(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      chi.set(i, j, sign_of(det(config[static_cast<std::size_t>(i)], config[static_cast<std::size_t>(j)])));
  if (chi.is_zero()) throw RankDeficient("all 2x2 minors vanish");
  return chi;
}

Rank2OM canonical_form(const Chirotope2& chi) {
  const int n = chi.size();
  check_ground_set(n);
  if (chi.is_zero()) throw InvalidChirotope("chirotope is identically zero");
  if (auto v = validate_grassmann_plucker(chi)) throw InvalidChirotope(v->rule + ": " + v->detail);

  std::vector<bool> loop(static_cast<std::size_t>(n), true);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (chi(i, j) != Sign::Zero) loop[static_cast<std::size_t>(i)] = false;

  // Group non-loops into classes: chi vanishes exactly within a class.
  std::vector<int> rep_of(static_cast<std::size_t>(n), -1);
  std::vector<int> reps;
  for (int i = 0; i < n; ++i) {
    if (loop[static_cast<std::size_t>(i)]) continue;
    for (int r : reps)
      if (chi(r, i) == Sign::Zero) { rep_of[static_cast<std::size_t>(i)] = r; break; }
    if (rep_of[static_cast<std::size_t>(i)] < 0) {
      rep_of[static_cast<std::size_t>(i)] = i;
      reps.push_back(i);
    }
  }
  if (reps.size() < 2) throw InvalidChirotope("fewer than two parallel classes");

  // Orient relative to the first class placed at angle 0.
  const int r = reps.front();
  const int outside = reps[1];
  std::vector<Sign> sigma(static_cast<std::size_t>(n), Sign::Zero);
  for (int j = 0; j < n; ++j) {
    if (loop[static_cast<std::size_t>(j)]) continue;
    if (rep_of[static_cast<std::size_t>(j)] == r)
      sigma[static_cast<std::size_t>(j)] = chi(j, outside) * chi(r, outside);
    else
      sigma[static_cast<std::size_t>(j)] = chi(r, j);
  }

  // Position of each class = number of classes preceding it.
  const std::size_t p = reps.size();
  std::vector<std::size_t> position(p, 0);
  for (std::size_t a = 1; a < p; ++a)
    for (std::size_t b = 1; b < p; ++b) {
      if (a == b) continue;
      const int ea = reps[a], eb = reps[b];
      // sign(c(a) - c(b)) = chi(b, a) sigma_a sigma_b
      if (chi(eb, ea) * sigma[static_cast<std::size_t>(ea)] * sigma[static_cast<std::size_t>(eb)] == Sign::Pos)
        ++position[a];
    }
  for (std::size_t a = 1; a < p; ++a) ++position[a];
  std::vector<ParallelClass> classes(p);
  std::vector<bool> used(p, false);
  for (std::size_t a = 0; a < p; ++a) {
    if (position[a] >= p || used[position[a]]) throw InvalidChirotope("classes admit no cyclic order");
    used[position[a]] = true;
  }
  for (int j = 0; j < n; ++j) {
    if (loop[static_cast<std::size_t>(j)]) continue;
    const auto a = static_cast<std::size_t>(std::find(reps.begin(), reps.end(), rep_of[static_cast<std::size_t>(j)]) - reps.begin());
    classes[position[a]].push_back({j, sigma[static_cast<std::size_t>(j)]});
  }

  Rank2OM om = Rank2OM::from_classes(n, std::move(classes));
  const Chirotope2 induced = om.chirotope();
  if (induced != chi && induced != -chi) throw InvalidChirotope("chirotope is not induced by any class structure");
  return om;
}

Rank2OM mu(const Matrix& matrix) {
  if (matrix.rows() != 2) throw RankDeficient("expected a 2 x n matrix");
  return canonical_form(chirotope_from_vectors(matrix.columns()));
}

namespace {

// Cyclic rays +C_1..+C_p, -C_1..-C_p; `positive[k]` says ray k lies on the
// positive side. Element e reads + iff its own ray is positive.
SignVector from_rays(const Rank2OM& om, const std::vector<bool>& positive, int zero_class) {
  const int p = om.num_classes();
  SignVector v(om.size());
  for (int e = 0; e < om.size(); ++e) {
    const int c = om.class_index(e);
    if (c < 0 || c == zero_class) continue;
    Sign s;
    if (positive[static_cast<std::size_t>(c)]) s = Sign::Pos;
    else if (positive[static_cast<std::size_t>(c + p)]) s = Sign::Neg;
    else continue;
    v.set(e, s * om.orientation(e));
  }
  return v;
}

}  // namespace

std::vector<SignVector> covectors(const Rank2OM& om) {
  const int p = om.num_classes();
  std::vector<SignVector> out{SignVector(om.size())};
  for (int s = 0; s < 2 * p; ++s) {
    std::vector<bool> tope(static_cast<std::size_t>(2 * p), false), cocircuit(static_cast<std::size_t>(2 * p), false);
    for (int t = 0; t < p; ++t) tope[static_cast<std::size_t>((s + t) % (2 * p))] = true;
    for (int t = 1; t < p; ++t) cocircuit[static_cast<std::size_t>((s + t) % (2 * p))] = true;
    out.push_back(from_rays(om, tope, -1));
    out.push_back(from_rays(om, cocircuit, s % p));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SignVector class_cocircuit(const Rank2OM& om, int k) {
  const int p = om.num_classes();
  std::vector<bool> positive(static_cast<std::size_t>(2 * p), false);
  for (int t = 1; t < p; ++t) positive[static_cast<std::size_t>((k + t) % (2 * p))] = true;
  SignVector d = from_rays(om, positive, k);
  const int first = std::countr_zero(d.support());
  return d[first] == Sign::Neg ? -d : d;
}

std::vector<SignVector> cocircuits(const Rank2OM& om) {
  std::vector<SignVector> out;
  for (int k = 0; k < om.num_classes(); ++k) {
    const SignVector d = class_cocircuit(om, k);
    out.push_back(d);
    out.push_back(-d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Violation> validate_covector_axioms(const std::vector<SignVector>& vectors) {
  if (vectors.empty()) return Violation{"zero", "empty covector set"};
  std::vector<SignVector> v = vectors;
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  const int n = v.front().size();
  for (const auto& x : v)
    if (x.size() != n) return Violation{"length", "sign vectors of different lengths"};
  auto has = [&](const SignVector& x) { return std::binary_search(v.begin(), v.end(), x); };

  if (!has(SignVector(n))) return Violation{"zero", "zero vector missing"};
  for (const auto& x : v)
    if (!has(-x)) return Violation{"negation", "-(" + x.str() + ") = " + (-x).str() + " missing"};
  for (const auto& x : v)
    for (const auto& y : v) {
      const SignVector c = x.compose(y);
      if (!has(c)) return Violation{"composition", x.str() + " o " + y.str() + " = " + c.str() + " missing"};
    }
  for (const auto& x : v)
    for (const auto& y : v) {
      const std::uint32_t sep = x.separation(y);
      if (sep == 0) continue;
      const SignVector xy = x.compose(y);
      const std::uint32_t fixed = ~sep & ((n == 32 ? 0u : (1u << n)) - 1u);
      for (int e = 0; e < n; ++e) {
        if (!((sep >> e) & 1u)) continue;
        const bool ok = std::any_of(v.begin(), v.end(), [&](const SignVector& z) {
          return z[e] == Sign::Zero && (z.positive() & fixed) == (xy.positive() & fixed) &&
                 (z.negative() & fixed) == (xy.negative() & fixed);
        });
        if (!ok)
          return Violation{"elimination", "no eliminant of " + x.str() + ", " + y.str() + " at element " +
                                              std::to_string(e + 1)};
      }
    }
  return std::nullopt;
}

std::optional<Violation> validate_grassmann_plucker(const Chirotope2& chi) {
  const int n = chi.size();
  for (int x2 = 0; x2 < n; ++x2)
    for (int y0 = 0; y0 < n; ++y0)
      for (int y1 = 0; y1 < n; ++y1)
        for (int y2 = 0; y2 < n; ++y2) {
          const Sign t[3] = {chi(y0, x2) * chi(y1, y2), -(chi(y1, x2) * chi(y0, y2)), chi(y2, x2) * chi(y0, y1)};
          const bool pos = std::find(t, t + 3, Sign::Pos) != t + 3;
          const bool neg = std::find(t, t + 3, Sign::Neg) != t + 3;
          if (pos != neg) {
            std::ostringstream os;
            os << "(x2,y0,y1,y2) = (" << x2 + 1 << ',' << y0 + 1 << ',' << y1 + 1 << ',' << y2 + 1 << ")";
            return Violation{"grassmann-plucker", os.str()};
          }
        }
  return std::nullopt;
}

std::optional<Violation> check_basis_orientation(const Rank2OM& om) {
  const auto cocs = cocircuits(om);
  for (int x = 0; x < om.size(); ++x) {
    if (om.is_loop(x)) continue;
    const int cx = om.class_index(x);
    const SignVector* d = nullptr;
    for (const auto& c : cocs) {
      bool zero_exactly_on_class = true;
      for (int e = 0; e < om.size(); ++e) {
        const bool in_zero_set = om.is_loop(e) || om.class_index(e) == cx;
        if ((c[e] == Sign::Zero) != in_zero_set) { zero_exactly_on_class = false; break; }
      }
      if (zero_exactly_on_class) { d = &c; break; }
    }
    if (d == nullptr) return Violation{"basis-orientation", "no cocircuit vanishes on the class of " + std::to_string(x + 1)};
    bool matches[2] = {true, true};  // epsilon = +, -
    for (int e = 0; e < om.size(); ++e) {
      if (om.is_loop(e) || om.class_index(e) == cx) continue;
      if (om.chi(e, x) != (*d)[e]) matches[0] = false;
      if (om.chi(e, x) != -(*d)[e]) matches[1] = false;
    }
    if (!matches[0] && !matches[1])
      return Violation{"basis-orientation", "chirotope disagrees with cocircuit " + d->str() + " at element " +
                                                std::to_string(x + 1)};
  }
  return std::nullopt;
}

Rank2OM reorient(const Rank2OM& om, const std::vector<int>& elements) {
  std::uint32_t flip = 0;
  for (int e : elements) {
    if (e < 0 || e >= om.size()) throw std::invalid_argument("reorientation element out of range");
    flip |= 1u << e;
  }
  auto classes = om.classes();
  for (auto& c : classes)
    for (auto& e : c)
      if ((flip >> e.element) & 1u) e.sign = -e.sign;
  return Rank2OM::from_classes(om.size(), std::move(classes));
}

Rank2OM relabel(const Rank2OM& om, const std::vector<int>& perm) {
  const int n = om.size();
  if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("permutation has the wrong length");
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (int v : perm) {
    if (v < 0 || v >= n || hit[static_cast<std::size_t>(v)]) throw std::invalid_argument("not a permutation");
    hit[static_cast<std::size_t>(v)] = true;
  }
  auto classes = om.classes();
  for (auto& c : classes)
    for (auto& e : c) e.element = perm[static_cast<std::size_t>(e.element)];
  return Rank2OM::from_classes(n, std::move(classes));
}

std::vector<int> parallel_class(const Rank2OM& om, int i) {
  if (i < 0 || i >= om.size()) throw std::invalid_argument("element out of range");
  if (om.is_loop(i)) throw LoopElement("element " + std::to_string(i + 1) + " is a loop");
  std::vector<int> out;
  for (const auto& e : om.classes()[static_cast<std::size_t>(om.class_index(i))]) out.push_back(e.element);
  return out;
}

std::vector<int> convex_hull(const Rank2OM& om, const std::vector<int>& subset) {
  std::uint32_t s = 0;
  for (int e : subset) {
    if (e < 0 || e >= om.size()) throw std::invalid_argument("subset element out of range");
    s |= 1u << e;
  }
  const auto cov = covectors(om);
  std::vector<int> out;
  for (int i = 0; i < om.size(); ++i) {
    const bool inside = std::all_of(cov.begin(), cov.end(), [&](const SignVector& c) {
      return c[i] != Sign::Neg || (c.negative() & s) != 0;
    });
    if (inside) out.push_back(i);
  }
  return out;
}

VectorConfig realize(const Rank2OM& om) {
  const int p = om.num_classes();
  VectorConfig out(static_cast<std::size_t>(om.size()), Vec2{0, 0});
  for (int e = 0; e < om.size(); ++e) {
    const int k = om.class_index(e);
    if (k < 0) continue;
    Vec2 d = k == 0 ? Vec2{1, 0} : Vec2{p - 2 * k, 1};
    if (om.orientation(e) == Sign::Neg) d = {-d.x, -d.y};
    out[static_cast<std::size_t>(e)] = d;
  }
  return out;
}

}  // namespace macp
