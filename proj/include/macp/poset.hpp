#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "macp/error.hpp"
#include "macp/simplicial_complex.hpp"

namespace macp {

using Bitset = boost::dynamic_bitset<>;

inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

// Finite poset over labelled elements. Comparabilities are stored as
// up-set and down-set bit rows; covers are the transitive reduction.
class Poset {
 public:
  Poset() = default;

  // Evaluates leq on all ordered pairs (in parallel), then validates it.
  static Poset build(std::vector<std::string> labels, const std::function<bool(int, int)>& leq,
                     unsigned threads = 0);
  // up[x] must contain exactly the y with x <= y.
  static Poset from_up_sets(std::vector<std::string> labels, std::vector<Bitset> up);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int x) const { return labels_[static_cast<std::size_t>(x)]; }
  const std::vector<std::string>& labels() const { return labels_; }
  int index_of(const std::string& label) const;  // ElementNotFound

  bool leq(int x, int y) const { return up_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]; }
  bool less(int x, int y) const { return x != y && leq(x, y); }
  const Bitset& up_set(int x) const { return up_[static_cast<std::size_t>(x)]; }
  const Bitset& down_set(int x) const { return down_[static_cast<std::size_t>(x)]; }

  const std::vector<int>& covers(int x) const { return covers_[static_cast<std::size_t>(x)]; }      // upper covers
  const std::vector<int>& cocovers(int x) const { return cocovers_[static_cast<std::size_t>(x)]; }  // lower covers
  std::vector<std::pair<int, int>> hasse() const;

  std::optional<int> bottom() const { return bottom_; }
  std::optional<int> top() const { return top_; }
  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;
  // Elements in an order compatible with <=.
  const std::vector<int>& linear_extension() const { return linear_; }

  // Index of each element in the poset this one was derived from via
  // induced(), interval() and with_bottom(); -1 for adjoined elements.
  const std::vector<int>& origin() const { return origin_; }

  Poset induced(const std::vector<int>& subset) const;
  Poset with_bottom(const std::string& label = "0^") const;
  // Removes the bottom and top elements (whichever exist).
  Poset proper_part() const;

 private:
  void finish();

  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
  std::vector<Bitset> up_, down_;
  std::vector<std::vector<int>> covers_, cocovers_;
  std::vector<int> linear_;
  std::vector<int> origin_;
  std::optional<int> bottom_, top_;
};

Poset build_poset(std::vector<std::string> labels, const std::function<bool(int, int)>& leq, unsigned threads = 0);
Poset interval(const Poset& p, int x, int y);  // NotComparable

// Longest-chain rank above the minimal elements; nullopt when some cover
// jumps by more than one rank.
std::optional<std::vector<int>> height_ranks(const Poset& p);

std::optional<Violation> is_thin(const Poset& p);
// Checks semimodularity of every interval: whenever z is covered by u != v
// and y >= u, v there is a common cover w of u and v with w <= y.
std::optional<Violation> is_totally_semimodular(const Poset& p);

struct AtomOrdering {
  std::vector<int> atoms;  // element indices of the poset the ordering refers to
};

// Both throw BudgetExceeded when the search visits more than `budget` nodes.
bool verify_recursive_atom_ordering(const Poset& p, const AtomOrdering& order, std::uint64_t budget = kDefaultBudget);
std::optional<AtomOrdering> find_recursive_atom_ordering(const Poset& p, std::uint64_t budget = kDefaultBudget);

SimplicialComplex order_complex(const Poset& p);

}  // namespace macp
