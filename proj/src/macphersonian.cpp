#include "macp/macphersonian.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>
#include <unordered_set>

namespace macp {

namespace {

std::size_t idx(int x) { return static_cast<std::size_t>(x); }

// Calls f(blocks) for every set partition of `items` into at least two
// blocks, via restricted growth strings (items[0] always in block 0).
template <class F>
void for_each_partition(const std::vector<int>& items, F&& f) {
  const std::size_t m = items.size();
  std::vector<int> rgs(m, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int blocks) {
    if (pos == m) {
      if (blocks < 2) return;
      std::vector<std::vector<int>> parts(idx(blocks));
      for (std::size_t t = 0; t < m; ++t) parts[idx(rgs[t])].push_back(items[t]);
      f(parts);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      rgs[pos] = b;
      rec(pos + 1, std::max(blocks, b + 1));
    }
  };
  rgs[0] = 0;
  rec(1, 1);
}

}  // namespace

int MacP2Poset::index_of(const Rank2OM& m) const {
  const auto it = index.find(m.key());
  if (it == index.end()) throw ElementNotFound("not an element of MacP(2," + std::to_string(n) + "): " + m.key());
  return it->second;
}

std::vector<long long> MacP2Poset::f_vector() const {
  std::vector<long long> f;
  for (int r : rank) {
    if (idx(r) >= f.size()) f.resize(idx(r) + 1, 0);
    ++f[idx(r)];
  }
  return f;
}

int rank_h(const Rank2OM& m) { return m.num_nonloops() + m.num_classes() - 4; }

std::vector<Rank2OM> enumerate_rank2(int n, int limit) {
  limit = std::min(limit, kMaxGroundSet);
  if (n < 2 || n > limit)
    throw LimitExceeded("n = " + std::to_string(n) + " outside the supported range [2, " + std::to_string(limit) + "]");
  std::unordered_set<std::string> seen;
  std::vector<Rank2OM> out;
  for (std::uint32_t loops = 0; loops < (1u << n); ++loops) {
    std::vector<int> nonloops;
    for (int i = 0; i < n; ++i)
      if (!((loops >> i) & 1u)) nonloops.push_back(i);
    if (nonloops.size() < 2) continue;
    const int l = static_cast<int>(nonloops.size());
    for_each_partition(nonloops, [&](std::vector<std::vector<int>>& blocks) {
      std::vector<int> order(blocks.size() - 1);
      std::iota(order.begin(), order.end(), 1);
      do {
        for (std::uint32_t signs = 0; signs < (1u << (l - 1)); ++signs) {
          std::vector<ParallelClass> classes;
          auto add = [&](const std::vector<int>& block) {
            ParallelClass c;
            for (int e : block) {
              const int bit = static_cast<int>(std::find(nonloops.begin(), nonloops.end(), e) - nonloops.begin());
              const bool neg = bit > 0 && ((signs >> (bit - 1)) & 1u);
              c.push_back({e, neg ? Sign::Neg : Sign::Pos});
            }
            classes.push_back(std::move(c));
          };
          add(blocks[0]);
          for (int b : order) add(blocks[idx(b)]);
          Rank2OM om = Rank2OM::from_classes(n, std::move(classes));
          if (seen.insert(om.key()).second) out.push_back(std::move(om));
        }
      } while (std::next_permutation(order.begin(), order.end()));
    });
  }
  std::sort(out.begin(), out.end(), [](const Rank2OM& a, const Rank2OM& b) {
    const int ra = rank_h(a), rb = rank_h(b);
    return ra != rb ? ra < rb : a.key() < b.key();
  });
  return out;
}

MacP2Poset enumerate_macp2(int n, const EnumerateOptions& options) {
  MacP2Poset macp;
  macp.n = n;
  macp.elements = enumerate_rank2(n, options.limit);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < macp.elements.size(); ++i) {
    macp.rank.push_back(rank_h(macp.elements[i]));
    labels.push_back(macp.elements[i].key());
    macp.index.emplace(macp.elements[i].key(), static_cast<int>(i));
  }
  const auto& el = macp.elements;
  const auto& rk = macp.rank;
  const bool fast = options.comparator == WeakOrderTest::Chirotope;
  macp.poset = Poset::build(
      std::move(labels),
      [&](int i, int j) {
        if (i == j) return true;
        if (rk[idx(i)] >= rk[idx(j)]) return false;
        const Rank2OM& a = el[idx(i)];
        const Rank2OM& b = el[idx(j)];
        if ((b.loop_mask() & ~a.loop_mask()) != 0) return false;
        return fast ? weak_leq_chirotope(a, b) : weak_leq(a, b);
      },
      options.threads);
  return macp;
}

bool weak_leq(const Rank2OM& n, const Rank2OM& m) {
  if (n.size() != m.size()) throw std::invalid_argument("ground sets differ");
  const auto vn = covectors(n);
  const auto vm = covectors(m);
  return std::all_of(vn.begin(), vn.end(), [&](const SignVector& x) {
    return std::any_of(vm.begin(), vm.end(), [&](const SignVector& y) { return x.is_below(y); });
  });
}

bool weak_leq_chirotope(const Rank2OM& n, const Rank2OM& m) {
  if (n.size() != m.size()) throw std::invalid_argument("ground sets differ");
  const auto np = n.chi_positive(), nn = n.chi_negative();
  const auto mp = m.chi_positive(), mn = m.chi_negative();
  const bool same = (np & ~mp) == 0 && (nn & ~mn) == 0;
  const bool flipped = (np & ~mn) == 0 && (nn & ~mp) == 0;
  return same || flipped;
}

std::vector<Rank2OM> coatoms_CR(const Rank2OM& m) {
  std::vector<Rank2OM> out;
  const auto& classes = m.classes();
  const int p = m.num_classes();
  for (int k = 0; k < p; ++k) {
    const auto& c = classes[idx(k)];
    if (c.size() < 2) continue;
    for (std::size_t t = 0; t < c.size(); ++t) {
      auto next = classes;
      next[idx(k)].erase(next[idx(k)].begin() + static_cast<std::ptrdiff_t>(t));
      out.push_back(Rank2OM::from_classes(m.size(), std::move(next)));
    }
  }
  if (p >= 3) {
    for (int k = 0; k + 1 < p; ++k) {
      auto next = classes;
      next[idx(k)].insert(next[idx(k)].end(), next[idx(k + 1)].begin(), next[idx(k + 1)].end());
      next.erase(next.begin() + k + 1);
      out.push_back(Rank2OM::from_classes(m.size(), std::move(next)));
    }
    // Wrap: the last class reaches the first through the antipode.
    auto next = classes;
    for (auto e : next.back()) next.front().push_back({e.element, -e.sign});
    next.pop_back();
    out.push_back(Rank2OM::from_classes(m.size(), std::move(next)));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Poset lower_interval(const MacP2Poset& macp, const Rank2OM& m) {
  const int top = macp.index_of(m);
  std::vector<int> below;
  const Bitset& down = macp.poset.down_set(top);
  for (auto i = down.find_first(); i != Bitset::npos; i = down.find_next(i)) below.push_back(static_cast<int>(i));
  return macp.poset.induced(below).with_bottom("0^");
}

Rank2OM basis_atom(int n, int i, int j) {
  return Rank2OM::from_classes(n, {{{i, Sign::Pos}}, {{j, Sign::Pos}}});
}

std::vector<int> line_positions(const VectorConfig& config) {
  std::vector<int> nonzero;
  std::vector<Vec2> dir(config.size());
  for (std::size_t e = 0; e < config.size(); ++e) {
    Vec2 v = config[e];
    if (v.x == 0 && v.y == 0) continue;
    if (v.y < 0 || (v.y == 0 && v.x < 0)) v = {-v.x, -v.y};
    dir[e] = v;
    nonzero.push_back(static_cast<int>(e));
  }
  // For directions with angle in [0, pi), det > 0 means strictly smaller angle.
  std::sort(nonzero.begin(), nonzero.end(), [&](int a, int b) {
    const auto d = det(dir[idx(a)], dir[idx(b)]);
    return d != 0 ? d > 0 : a < b;
  });
  std::vector<int> pos(config.size(), -1);
  int current = -1;
  for (std::size_t t = 0; t < nonzero.size(); ++t) {
    if (t == 0 || det(dir[idx(nonzero[t - 1])], dir[idx(nonzero[t])]) != 0) ++current;
    pos[idx(nonzero[t])] = current;
  }
  return pos;
}

std::vector<RaoAtom> rao_ordering(const Rank2OM& m, const VectorConfig& realization) {
  if (static_cast<int>(realization.size()) != m.size()) throw RealizationMismatch("realization has the wrong size");
  Rank2OM realized;
  try {
    realized = mu(Matrix::from_columns(realization));
  } catch (const RankDeficient&) {
    throw RealizationMismatch("realization has rank below 2");
  }
  if (realized != m) throw RealizationMismatch("realization gives " + realized.key() + ", expected " + m.key());
  const auto pos = line_positions(realization);
  auto label_less = [&](int a, int b) { return pos[idx(a)] != pos[idx(b)] ? pos[idx(a)] < pos[idx(b)] : a < b; };
  std::vector<RaoAtom> atoms;
  for (int i = 0; i < m.size(); ++i)
    for (int j = i + 1; j < m.size(); ++j) {
      if (m.chi(i, j) == Sign::Zero) continue;
      const int a = label_less(i, j) ? i : j;
      const int b = a == i ? j : i;
      atoms.push_back({basis_atom(m.size(), i, j), a, b});
    }
  std::sort(atoms.begin(), atoms.end(), [&](const RaoAtom& x, const RaoAtom& y) {
    if (x.first != y.first) return label_less(x.first, y.first);
    return label_less(x.second, y.second);
  });
  return atoms;
}

AtomOrdering to_atom_ordering(const Poset& p, const std::vector<RaoAtom>& atoms) {
  AtomOrdering order;
  for (const auto& a : atoms) order.atoms.push_back(p.index_of(a.atom.key()));
  return order;
}

}  // namespace macp
