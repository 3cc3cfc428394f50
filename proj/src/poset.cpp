#include "macp/poset.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <tuple>

#include "macp/parallel.hpp"

namespace macp {

namespace {

std::size_t idx(int x) { return static_cast<std::size_t>(x); }

template <class F>
void for_each_bit(const Bitset& b, F&& f) {
  for (auto i = b.find_first(); i != Bitset::npos; i = b.find_next(i)) f(static_cast<int>(i));
}

}  // namespace

// ---------------------------------------------------------------- Poset

Poset Poset::build(std::vector<std::string> labels, const std::function<bool(int, int)>& leq, unsigned threads) {
  const std::size_t n = labels.size();
  std::vector<Bitset> up(n, Bitset(n));
  parallel_for(n, threads, [&](std::size_t x) {
    for (std::size_t y = 0; y < n; ++y)
      if (leq(static_cast<int>(x), static_cast<int>(y))) up[x].set(y);
  });
  return from_up_sets(std::move(labels), std::move(up));
}

Poset Poset::from_up_sets(std::vector<std::string> labels, std::vector<Bitset> up) {
  const std::size_t n = labels.size();
  if (up.size() != n) throw std::invalid_argument("one up-set per element required");
  for (const auto& row : up)
    if (row.size() != n) throw std::invalid_argument("up-set rows must span all elements");

  Poset p;
  p.labels_ = std::move(labels);
  p.up_ = std::move(up);
  p.down_.assign(n, Bitset(n));
  for (std::size_t x = 0; x < n; ++x) {
    if (!p.up_[x][x]) throw NotAPartialOrder("not reflexive at " + p.labels_[x]);
    for_each_bit(p.up_[x], [&](int y) { p.down_[idx(y)].set(x); });
  }
  for (std::size_t x = 0; x < n; ++x) {
    Bitset both = p.up_[x] & p.down_[x];
    both.reset(x);
    if (both.any())
      throw NotAPartialOrder("not antisymmetric: " + p.labels_[x] + " and " + p.labels_[both.find_first()]);
  }

  // Transitivity: up(y) must lie inside up(x) whenever x <= y.
  std::size_t pairs = 0;
  for (const auto& row : p.up_) pairs += row.count();
  const std::size_t words = (n + 63) / 64;
  auto check = [&](std::size_t x, std::size_t y) {
    if (!p.up_[y].is_subset_of(p.up_[x])) {
      const Bitset bad = p.up_[y] - p.up_[x];
      throw NotAPartialOrder("not transitive: " + p.labels_[x] + " <= " + p.labels_[y] + " <= " +
                             p.labels_[bad.find_first()]);
    }
  };
  if (n <= 500 || pairs * words <= 400'000'000) {
    for (std::size_t x = 0; x < n; ++x) for_each_bit(p.up_[x], [&](int y) { check(x, idx(y)); });
  } else {
    std::mt19937_64 rng(0x5eed);
    for (int t = 0; t < 200'000; ++t) {
      const std::size_t x = rng() % n;
      std::vector<int> ys;
      for_each_bit(p.up_[x], [&](int y) { ys.push_back(y); });
      check(x, idx(ys[rng() % ys.size()]));
    }
  }
  p.origin_.resize(n);
  for (std::size_t i = 0; i < n; ++i) p.origin_[i] = static_cast<int>(i);
  p.finish();
  return p;
}

void Poset::finish() {
  const std::size_t n = labels_.size();
  index_.clear();
  for (std::size_t i = 0; i < n; ++i)
    if (!index_.emplace(labels_[i], static_cast<int>(i)).second)
      throw std::invalid_argument("duplicate poset label " + labels_[i]);

  std::vector<std::size_t> below(n);
  for (std::size_t i = 0; i < n; ++i) below[i] = down_[i].count();
  linear_.resize(n);
  for (std::size_t i = 0; i < n; ++i) linear_[i] = static_cast<int>(i);
  std::stable_sort(linear_.begin(), linear_.end(), [&](int a, int b) { return below[idx(a)] < below[idx(b)]; });
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[idx(linear_[i])] = i;

  covers_.assign(n, {});
  cocovers_.assign(n, {});
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<int> above;
    for_each_bit(up_[x], [&](int y) { if (idx(y) != x) above.push_back(y); });
    std::sort(above.begin(), above.end(), [&](int a, int b) { return pos[idx(a)] < pos[idx(b)]; });
    Bitset dominated(n);
    for (int y : above) {
      if (dominated[idx(y)]) continue;
      covers_[x].push_back(y);
      dominated |= up_[idx(y)];
    }
    std::sort(covers_[x].begin(), covers_[x].end());
    for (int y : covers_[x]) cocovers_[idx(y)].push_back(static_cast<int>(x));
  }
  for (auto& c : cocovers_) std::sort(c.begin(), c.end());

  bottom_.reset();
  top_.reset();
  for (std::size_t x = 0; x < n; ++x) {
    if (up_[x].count() == n) bottom_ = static_cast<int>(x);
    if (down_[x].count() == n) top_ = static_cast<int>(x);
  }
}

int Poset::index_of(const std::string& label) const {
  const auto it = index_.find(label);
  if (it == index_.end()) throw ElementNotFound("no element labelled " + label);
  return it->second;
}

std::vector<std::pair<int, int>> Poset::hasse() const {
  std::vector<std::pair<int, int>> edges;
  for (int x = 0; x < size(); ++x)
    for (int y : covers(x)) edges.emplace_back(x, y);
  return edges;
}

std::vector<int> Poset::minimal_elements() const {
  std::vector<int> out;
  for (int x = 0; x < size(); ++x)
    if (cocovers(x).empty()) out.push_back(x);
  return out;
}

std::vector<int> Poset::maximal_elements() const {
  std::vector<int> out;
  for (int x = 0; x < size(); ++x)
    if (covers(x).empty()) out.push_back(x);
  return out;
}

Poset Poset::induced(const std::vector<int>& subset) const {
  const std::size_t m = subset.size();
  Poset p;
  p.labels_.reserve(m);
  for (int s : subset) p.labels_.push_back(label(s));
  p.up_.assign(m, Bitset(m));
  p.down_.assign(m, Bitset(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (leq(subset[a], subset[b])) {
        p.up_[a].set(b);
        p.down_[b].set(a);
      }
  p.origin_.reserve(m);
  for (int x : subset) p.origin_.push_back(origin_[idx(x)]);
  p.finish();
  return p;
}

Poset Poset::with_bottom(const std::string& label) const {
  const std::size_t n = labels_.size();
  Poset p;
  p.labels_.reserve(n + 1);
  p.labels_.push_back(label);
  p.labels_.insert(p.labels_.end(), labels_.begin(), labels_.end());
  p.up_.assign(n + 1, Bitset(n + 1));
  p.down_.assign(n + 1, Bitset(n + 1));
  p.up_[0].set();
  for (std::size_t x = 0; x < n; ++x) {
    p.down_[x + 1].set(0);
    for_each_bit(up_[x], [&](int y) {
      p.up_[x + 1].set(idx(y) + 1);
      p.down_[idx(y) + 1].set(x + 1);
    });
  }
  p.down_[0].set(0);
  p.origin_.push_back(-1);
  p.origin_.insert(p.origin_.end(), origin_.begin(), origin_.end());
  p.finish();
  return p;
}

Poset Poset::proper_part() const {
  std::vector<int> keep;
  for (int x = 0; x < size(); ++x)
    if (x != bottom_.value_or(-1) && x != top_.value_or(-1)) keep.push_back(x);
  return induced(keep);
}

// ---------------------------------------------------------------- free functions

Poset build_poset(std::vector<std::string> labels, const std::function<bool(int, int)>& leq, unsigned threads) {
  return Poset::build(std::move(labels), leq, threads);
}

Poset interval(const Poset& p, int x, int y) {
  if (!p.leq(x, y)) throw NotComparable(p.label(x) + " is not below " + p.label(y));
  const Bitset members = p.up_set(x) & p.down_set(y);
  std::vector<int> subset;
  for_each_bit(members, [&](int z) { subset.push_back(z); });
  return p.induced(subset);
}

std::optional<std::vector<int>> height_ranks(const Poset& p) {
  std::vector<int> rank(idx(p.size()), 0);
  for (int y : p.linear_extension())
    for (int x : p.cocovers(y)) rank[idx(y)] = std::max(rank[idx(y)], rank[idx(x)] + 1);
  for (const auto& [x, y] : p.hasse())
    if (rank[idx(y)] != rank[idx(x)] + 1) return std::nullopt;
  return rank;
}

std::optional<Violation> is_thin(const Poset& p) {
  if (!height_ranks(p)) return Violation{"graded", "poset is not graded"};
  for (int x = 0; x < p.size(); ++x)
    for (int c : p.covers(x))
      for (int y : p.covers(c)) {
        const auto size = (p.up_set(x) & p.down_set(y)).count();
        if (size != 4)
          return Violation{"thin", "[" + p.label(x) + ", " + p.label(y) + "] has " + std::to_string(size) +
                                       " elements"};
      }
  return std::nullopt;
}

std::optional<Violation> is_totally_semimodular(const Poset& p) {
  const std::size_t n = idx(p.size());
  for (int z = 0; z < p.size(); ++z) {
    const auto& cz = p.covers(z);
    for (std::size_t a = 0; a < cz.size(); ++a)
      for (std::size_t b = a + 1; b < cz.size(); ++b) {
        const int u = cz[a], v = cz[b];
        const Bitset common = p.up_set(u) & p.up_set(v);
        if (common.none()) continue;
        Bitset reach(n);
        std::vector<int> w;
        std::set_intersection(p.covers(u).begin(), p.covers(u).end(), p.covers(v).begin(), p.covers(v).end(),
                              std::back_inserter(w));
        for (int x : w) reach |= p.up_set(x);
        const Bitset missing = common - reach;
        if (missing.any())
          return Violation{"semimodular", p.label(u) + " and " + p.label(v) + " cover " + p.label(z) +
                                              " but no common cover lies below " +
                                              p.label(static_cast<int>(missing.find_first()))};
      }
  }
  return std::nullopt;
}

namespace {

class RaoSearch {
 public:
  RaoSearch(const Poset& p, std::vector<int> rank, std::uint64_t budget)
      : p_(p), rank_(std::move(rank)), budget_(budget) {}

  // Atoms of [b, top] in index order.
  std::vector<int> atoms(int b, int top) const {
    std::vector<int> out;
    for (int a : p_.covers(b))
      if (p_.leq(a, top)) out.push_back(a);
    return out;
  }

  // Condition (ii) for placing atom a after the atoms in `placed`.
  bool exchange_condition(int top, int a, const std::vector<int>& placed) const {
    const std::size_t n = idx(p_.size());
    Bitset above_placed(n);
    for (int s : placed) above_placed |= p_.up_set(s);
    const Bitset targets = p_.up_set(a) & p_.down_set(top) & above_placed;
    if (targets.none()) return true;
    Bitset reach(n);
    for (int z : p_.covers(a)) {
      if (!p_.leq(z, top)) continue;
      const bool covers_placed = std::any_of(placed.begin(), placed.end(), [&](int s) {
        return std::binary_search(p_.covers(s).begin(), p_.covers(s).end(), z);
      });
      if (covers_placed) reach |= p_.up_set(z);
    }
    return targets.is_subset_of(reach);
  }

  // Atoms of [a, top] covering one of the placed atoms.
  std::vector<int> forced_prefix(int a, int top, const std::vector<int>& placed) const {
    std::vector<int> out;
    for (int c : atoms(a, top))
      if (std::any_of(placed.begin(), placed.end(), [&](int s) {
            return std::binary_search(p_.covers(s).begin(), p_.covers(s).end(), c);
          }))
        out.push_back(c);
    return out;
  }

  // Does [b, top] admit a recursive atom ordering starting with `prefix`
  // (in some order)? When `order` is given, the ordering found is stored.
  bool admits(int b, int top, const std::vector<int>& prefix, std::vector<int>* order = nullptr) {
    if (rank_[idx(top)] - rank_[idx(b)] <= 2 && order == nullptr) return true;
    const auto key = std::make_tuple(b, top, prefix);
    if (order == nullptr)
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const std::vector<int> all = atoms(b, top);
    std::vector<int> placed;
    std::set<Bitset> failed;
    Bitset in_prefix(all.size());
    for (std::size_t i = 0; i < all.size(); ++i)
      if (std::binary_search(prefix.begin(), prefix.end(), all[i])) in_prefix.set(i);
    Bitset used(all.size());
    const bool ok = extend(top, all, in_prefix, used, placed, failed);
    if (ok && order) *order = placed;
    memo_[key] = ok;
    return ok;
  }

  bool check_atom(int top, int a, const std::vector<int>& placed) {
    if (!exchange_condition(top, a, placed)) return false;
    return admits(a, top, forced_prefix(a, top, placed));
  }

 private:
  bool extend(int top, const std::vector<int>& all, const Bitset& in_prefix, Bitset& used, std::vector<int>& placed,
              std::set<Bitset>& failed) {
    if (placed.size() == all.size()) return true;
    if (failed.count(used)) return false;
    if (++nodes_ > budget_) throw BudgetExceeded("recursive atom ordering search exceeded its node budget");
    const Bitset pending_prefix = in_prefix - used;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (used[i]) continue;
      if (pending_prefix.any() && !pending_prefix[i]) continue;
      if (!check_atom(top, all[i], placed)) continue;
      used.set(i);
      placed.push_back(all[i]);
      if (extend(top, all, in_prefix, used, placed, failed)) return true;
      placed.pop_back();
      used.reset(i);
    }
    failed.insert(used);
    return false;
  }

  const Poset& p_;
  std::vector<int> rank_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::map<std::tuple<int, int, std::vector<int>>, bool> memo_;
};

std::vector<int> bounded_ranks(const Poset& p) {
  if (!p.bottom() || !p.top()) throw std::invalid_argument("poset must have a bottom and a top element");
  auto rank = height_ranks(p);
  if (!rank) throw std::invalid_argument("poset must be graded");
  return *rank;
}

}  // namespace

bool verify_recursive_atom_ordering(const Poset& p, const AtomOrdering& order, std::uint64_t budget) {
  RaoSearch search(p, bounded_ranks(p), budget);
  const int b = *p.bottom(), top = *p.top();
  std::vector<int> expected = search.atoms(b, top), given = order.atoms;
  std::sort(expected.begin(), expected.end());
  std::sort(given.begin(), given.end());
  if (expected != given) return false;
  std::vector<int> placed;
  for (int a : order.atoms) {
    if (!search.check_atom(top, a, placed)) return false;
    placed.push_back(a);
  }
  return true;
}

std::optional<AtomOrdering> find_recursive_atom_ordering(const Poset& p, std::uint64_t budget) {
  RaoSearch search(p, bounded_ranks(p), budget);
  const int b = *p.bottom(), top = *p.top();
  if (!is_totally_semimodular(p)) return AtomOrdering{search.atoms(b, top)};
  std::vector<int> order;
  if (!search.admits(b, top, {}, &order)) return std::nullopt;
  return AtomOrdering{order};
}

SimplicialComplex order_complex(const Poset& p) {
  constexpr std::size_t kMaxChains = 20'000'000;
  std::vector<Simplex> chains;
  std::vector<int> chain;
  std::function<void(int)> walk = [&](int x) {
    chain.push_back(x);
    if (p.covers(x).empty()) {
      if (chains.size() >= kMaxChains) throw LimitExceeded("too many maximal chains");
      chains.push_back(chain);
    }
    for (int y : p.covers(x)) walk(y);
    chain.pop_back();
  };
  for (int x : p.minimal_elements()) walk(x);
  return SimplicialComplex::from_faces(p.size(), std::move(chains));
}

}  // namespace macp
