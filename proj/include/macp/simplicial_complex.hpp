#pragma once

#include <cstdint>
#include <vector>

namespace macp {

using Simplex = std::vector<int>;  // sorted vertex indices

// Finite abstract simplicial complex. Built from any generating set of
// faces; all faces are materialized per dimension in lexicographic order.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  static SimplicialComplex from_faces(int num_vertices, std::vector<Simplex> generators);

  int num_vertices() const { return num_vertices_; }
  int dimension() const { return static_cast<int>(faces_.size()) - 1; }  // -1 when empty
  bool empty() const { return faces_.empty(); }

  const std::vector<Simplex>& maximal_faces() const { return maximal_; }
  const std::vector<Simplex>& faces(int k) const;
  // Position of a face inside faces(face.size() - 1), or -1.
  long long index_of(const Simplex& face) const;
  bool contains(const Simplex& face) const { return index_of(face) >= 0; }

  std::vector<long long> f_vector() const;
  bool is_pure() const;

 private:
  int num_vertices_ = 0;
  std::vector<std::vector<Simplex>> faces_;
  std::vector<Simplex> maximal_;
};

}  // namespace macp
