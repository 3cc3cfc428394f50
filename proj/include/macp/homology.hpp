#pragma once

#include <vector>

#include "macp/simplicial_complex.hpp"

namespace macp {

struct BettiProfile {
  std::vector<long long> betti;     // b_0 .. b_d over GF(2)
  std::vector<long long> f_vector;  // face counts f_0 .. f_d
  long long euler = 0;              // alternating sum of face counts
  bool euler_consistent = false;    // equals the alternating Betti sum
};

BettiProfile betti_gf2(const SimplicialComplex& k);
long long euler_characteristic(const SimplicialComplex& k);
// GF(2) homology of S^d, purity in dimension d, and every (d-1)-face in
// exactly two d-faces.
bool is_sphere_profile(const SimplicialComplex& k, int d);

}  // namespace macp
