#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "macp/macphersonian.hpp"

namespace macp {

// A flag (N, M): a rank-1 strong map image N of the rank-2 matroid M.
class FlagOM {
 public:
  FlagOM() = default;
  FlagOM(Rank1OM n, Rank2OM m);  // InvalidFlag unless N is a strong image of M

  static FlagOM parse(std::string_view text);  // "flag;z=<word>;M=<om>"

  const Rank1OM& N() const { return n_; }
  const Rank2OM& M() const { return m_; }
  const SignVector& z() const { return n_.covector(); }
  int size() const { return m_.size(); }
  const std::string& key() const { return key_; }
  const std::string& str() const { return key_; }

  friend bool operator==(const FlagOM& a, const FlagOM& b) { return a.key_ == b.key_; }
  friend auto operator<=>(const FlagOM& a, const FlagOM& b) { return a.key_ <=> b.key_; }

 private:
  Rank1OM n_;
  Rank2OM m_;
  std::string key_;
};

// Rank-1 strong images of a fixed M under the weak order.
struct G1Poset {
  Rank2OM m;
  std::vector<Rank1OM> elements;
  std::vector<int> height;  // h_M(N)
  Poset poset;
};

G1Poset rank1_images(const Rank2OM& m);
bool is_strong_image(const Rank1OM& n, const Rank2OM& m);
bool rank1_leq(const Rank1OM& a, const Rank1OM& b);
// 0 for cocircuits, 1 for topes.
int rank1_height(const Rank2OM& m, const SignVector& z);
int flag_rank(const FlagOM& f);  // h(M) + h_M(N)

// Unique maximal nonzero covector of m1 below z2.
SignVector max_covector_below(const Rank2OM& m1, const SignVector& z2);

FlagOM nu(const Matrix& y, const Matrix& x);

// Adjoins element n+1 with chi'(n+1, i) = w(i), where w = +-z and chi is
// the representative of M with chi(1,2) = +. Without an anchor w(1) = -
// (or w(2) = + when z(1) = 0); with an anchor w is the sign choice lying
// above it. Requires {1,2} to be a basis of M.
Rank2OM iota_embed(const FlagOM& flag, const std::optional<SignVector>& anchor = std::nullopt);
// The row w used by iota_embed.
SignVector iota_sign_choice(const FlagOM& flag, const std::optional<SignVector>& anchor = std::nullopt);

struct MacP12Poset {
  int n = 0;
  MacP2Poset base;
  std::vector<FlagOM> elements;  // sorted by (rank, key)
  std::vector<int> base_index;   // position of M in base
  std::vector<int> rank;         // flag_rank
  Poset poset;
  std::unordered_map<std::string, int> index;

  int index_of(const FlagOM& f) const;
  std::vector<long long> f_vector() const;
};

MacP12Poset enumerate_macp12(int n, const EnumerateOptions& options = {});
bool flag_leq(const FlagOM& a, const FlagOM& b);
// Elements covering f in the enumerated poset.
std::vector<FlagOM> flag_covers(const MacP12Poset& p, const FlagOM& f);
// MacP(1,2,n) below f with an adjoined bottom "0^"; f is the top.
Poset flag_lower_interval(const MacP12Poset& p, const FlagOM& f);

// Poset of all rank-1 oriented matroids on [n] under weak maps.
Poset enumerate_macp1(int n);

// Position of the line of z among the class lines of the realization:
// class k's line sits at k, an open arc after line k at k + 1/2, and the
// arc closing the half-turn at p - 1/2. Returned doubled as an integer.
int line_slot_twice(const VectorConfig& realization, const SignVector& z);

std::vector<FlagOM> flag_rao_ordering(const FlagOM& flag, const VectorConfig& realization);
AtomOrdering to_atom_ordering(const Poset& p, const std::vector<FlagOM>& atoms);

int flag_cell_dimension(const FlagOM& flag);
// (Y, X) pairs with nu(Y, X) = flag.
std::vector<std::pair<Matrix, Matrix>> sample_flag_cell(const FlagOM& flag, int count, std::uint64_t seed);

struct FlagBoundaryReport {
  std::vector<std::pair<Matrix, Matrix>> samples;  // points of the face cell
  int perturbations = 0;
  int failures = 0;
};

// Samples a flag coatom's cell and perturbs each sample into the cell of
// flag, going through the adjoined-element embedding into MacP(2,n+1).
FlagBoundaryReport sample_flag_boundary(const FlagOM& flag, const FlagOM& face, int count, std::uint64_t seed);

}  // namespace macp
