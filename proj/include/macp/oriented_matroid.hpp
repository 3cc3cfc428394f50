#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "macp/error.hpp"
#include "macp/rational.hpp"
#include "macp/sign_vector.hpp"

namespace macp {

// Rank-2 chirotopes are cached as two bit masks over the strict upper
// triangle of pairs, so the ground set is capped at 11 elements.
inline constexpr int kMaxGroundSet = 11;

inline int pair_index(int n, int i, int j) {  // requires i < j
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

// Alternating sign function on ordered pairs of [n], stored as the strict
// upper triangle in row-major order.
class Chirotope2 {
 public:
  Chirotope2() = default;
  explicit Chirotope2(int n);  // all zero

  static Chirotope2 parse(std::string_view text);  // "n=<n>;chi=<word>"

  int size() const { return n_; }
  Sign operator()(int i, int j) const;
  void set(int i, int j, Sign s);  // also fixes (j, i)
  bool is_zero() const;
  Chirotope2 operator-() const;
  std::string str() const;

  friend bool operator==(const Chirotope2&, const Chirotope2&) = default;

 private:
  int n_ = 0;
  std::vector<Sign> upper_;
};

struct SignedElement {
  int element;  // 0-based
  Sign sign;    // Pos or Neg

  friend bool operator==(const SignedElement&, const SignedElement&) = default;
};

using ParallelClass = std::vector<SignedElement>;

// A rank-2 oriented matroid in canonical form: loops plus the signed
// parallel classes listed in angular order. The representative is chosen
// as the lexicographic minimum over all rotations (moving the first class
// to the end and flipping its signs), reversals and global sign flips.
class Rank2OM {
 public:
  Rank2OM() = default;

  // Accepts any representative of the identification class.
  static Rank2OM from_classes(int n, std::vector<ParallelClass> classes);
  static Rank2OM parse(std::string_view text);

  int size() const { return n_; }
  const std::vector<ParallelClass>& classes() const { return classes_; }
  int num_classes() const { return static_cast<int>(classes_.size()); }  // p_M
  int num_nonloops() const;                                            // l_M
  std::uint32_t loop_mask() const { return loops_; }
  std::vector<int> loops() const;
  bool is_loop(int i) const { return (loops_ >> i) & 1u; }
  int class_index(int i) const { return class_of_[static_cast<std::size_t>(i)]; }  // -1 for loops
  Sign orientation(int i) const { return sigma_[static_cast<std::size_t>(i)]; }

  Sign chi(int i, int j) const;
  Chirotope2 chirotope() const;
  std::uint64_t chi_positive() const { return chi_pos_; }
  std::uint64_t chi_negative() const { return chi_neg_; }

  // Canonical text form; doubles as the deduplication key.
  const std::string& key() const { return key_; }
  const std::string& str() const { return key_; }

  // Flips one orientation without recomputing the cached chirotope or key.
  // Exists only to exercise the validators on inconsistent data.
  Rank2OM with_corrupted_orientation(int element) const;

  friend bool operator==(const Rank2OM& a, const Rank2OM& b) { return a.key_ == b.key_; }
  friend auto operator<=>(const Rank2OM& a, const Rank2OM& b) { return a.key_ <=> b.key_; }

 private:
  void rebuild_caches();

  int n_ = 0;
  std::uint32_t loops_ = 0;
  std::vector<ParallelClass> classes_;
  std::vector<int> class_of_;
  std::vector<Sign> sigma_;
  std::uint64_t chi_pos_ = 0;
  std::uint64_t chi_neg_ = 0;
  std::string key_;
};

// Covector triple {0, z, -z}; z is normalized so its first nonzero entry is +.
class Rank1OM {
 public:
  Rank1OM() = default;
  explicit Rank1OM(SignVector z);

  int size() const { return z_.size(); }
  const SignVector& covector() const { return z_; }
  std::string str() const { return z_.str(); }

  friend bool operator==(const Rank1OM&, const Rank1OM&) = default;
  friend auto operator<=>(const Rank1OM&, const Rank1OM&) = default;

 private:
  SignVector z_;
};

Chirotope2 chirotope_from_vectors(const VectorConfig& config);
Rank2OM canonical_form(const Chirotope2& chi);
Rank2OM mu(const Matrix& matrix);

// Sorted; contains the zero vector and is closed under negation.
std::vector<SignVector> covectors(const Rank2OM& om);
// Sorted; 2p entries, one +/- pair per class.
std::vector<SignVector> cocircuits(const Rank2OM& om);
// The cocircuit vanishing on class k whose first nonzero entry is +.
SignVector class_cocircuit(const Rank2OM& om, int k);

std::optional<Violation> validate_covector_axioms(const std::vector<SignVector>& vectors);
std::optional<Violation> validate_grassmann_plucker(const Chirotope2& chi);
std::optional<Violation> check_basis_orientation(const Rank2OM& om);

Rank2OM reorient(const Rank2OM& om, const std::vector<int>& elements);
// perm[i] is the new label of element i.
Rank2OM relabel(const Rank2OM& om, const std::vector<int>& perm);
std::vector<int> parallel_class(const Rank2OM& om, int i);
std::vector<int> convex_hull(const Rank2OM& om, const std::vector<int>& subset);

// A fixed realization: class k along (p - 2k, 1) for k >= 1, class 0 along e1.
VectorConfig realize(const Rank2OM& om);

}  // namespace macp
