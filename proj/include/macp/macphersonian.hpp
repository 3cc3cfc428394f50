#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "macp/oriented_matroid.hpp"
#include "macp/poset.hpp"

namespace macp {

enum class WeakOrderTest {
  Chirotope,  // sign-compatibility of chirotopes (fast)
  Covector,   // literal covector domination
};

struct EnumerateOptions {
  int limit = 6;
  WeakOrderTest comparator = WeakOrderTest::Chirotope;
  unsigned threads = 0;
};

// MacP(2,n): all rank-2 oriented matroids on [n] under weak maps.
// Elements are sorted by (rank, key); poset index i is elements[i].
struct MacP2Poset {
  int n = 0;
  std::vector<Rank2OM> elements;
  std::vector<int> rank;  // h(M)
  Poset poset;
  std::unordered_map<std::string, int> index;

  int index_of(const Rank2OM& m) const;  // ElementNotFound
  std::vector<long long> f_vector() const;  // element count per rank
};

// Every rank-2 oriented matroid on [n], sorted by (rank, key).
std::vector<Rank2OM> enumerate_rank2(int n, int limit = 6);
MacP2Poset enumerate_macp2(int n, const EnumerateOptions& options = {});

bool weak_leq(const Rank2OM& n, const Rank2OM& m);
bool weak_leq_chirotope(const Rank2OM& n, const Rank2OM& m);

int rank_h(const Rank2OM& m);
// Elements covered by m, from the two cover rules: loop one element of a
// class with at least two elements, or merge two cyclically adjacent classes.
std::vector<Rank2OM> coatoms_CR(const Rank2OM& m);

// MacP(2,n) below m with an adjoined bottom labelled "0^"; m is the top.
Poset lower_interval(const MacP2Poset& macp, const Rank2OM& m);

// Atom of MacP(2,n): exactly two non-loops i and j.
Rank2OM basis_atom(int n, int i, int j);

struct RaoAtom {
  Rank2OM atom;
  int first;   // element with the smaller label
  int second;  // element with the larger label
};

// Atoms of the lower interval of m ordered by the affine-line labelling of
// the realization; throws RealizationMismatch unless mu(realization) = m.
std::vector<RaoAtom> rao_ordering(const Rank2OM& m, const VectorConfig& realization);
// Resolves atoms to element indices of p via their keys.
AtomOrdering to_atom_ordering(const Poset& p, const std::vector<RaoAtom>& atoms);

// Angular position (0-based, in [0, pi)) of the line through each element;
// -1 for loops. Lines through the same point share a position.
std::vector<int> line_positions(const VectorConfig& config);

// ---------------------------------------------------------------- cells

// Chart of the open cell of m. The basis pair (b1, b2) is the
// lexicographically first basis; b1 sits on e1 and b2 on e2, the other
// classes take free angles in (0, pi/2) or (pi/2, pi), and every other
// non-loop carries a free radius.
struct CellChart {
  Rank2OM om;
  int basis_first = 0;
  int basis_second = 1;
  std::vector<ParallelClass> classes;  // angular order, class of basis_first first
  int basis_second_class = 1;          // position of the class of basis_second
  int lower_block = 0;                 // free angles in (0, pi/2)
  int upper_block = 0;                 // free angles in (pi/2, pi)
  int radii = 0;                       // free radii
  int dimension() const { return lower_block + upper_block + radii; }
};

CellChart cell_chart(const Rank2OM& m);

// Deterministic pseudo-random stream keyed by (seed, key, index). Only raw
// engine output is consumed, so results agree across platforms.
std::mt19937_64 make_stream(std::uint64_t seed, const std::string& key, std::uint64_t index);

// Points X of the open cell, each with mu(X) = m.
std::vector<Matrix> sample_cell(const Rank2OM& m, int count, std::uint64_t seed);

struct BoundaryReport {
  std::vector<Matrix> samples;  // points of the face cell
  int perturbations = 0;        // perturbed points checked against m
  int failures = 0;             // perturbed points with mu != m
};

inline constexpr int kBoundarySteps = 10;  // eps = 2^-1 .. 2^-10

// Samples the face cell and pushes each sample back into the cell of m by
// eps-perturbations, checking mu at every step; NotACoatom unless face is
// one of coatoms_CR(m).
BoundaryReport sample_boundary(const Rank2OM& m, const Rank2OM& face, int count, std::uint64_t seed);
// Perturbs a face point into the cell of m; step k uses eps = 2^-k.
Matrix perturb_into_cell(const Rank2OM& m, const Rank2OM& face, const Matrix& face_point, int k);

}  // namespace macp
