#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include "macp/homology.hpp"
#include "macp/simplicial_complex.hpp"
#include "oracles.hpp"

using namespace macp;

namespace {

SimplicialComplex cycle(int m) {
  std::vector<Simplex> edges;
  for (int i = 0; i < m; ++i) {
    Simplex e{i, (i + 1) % m};
    std::sort(e.begin(), e.end());
    edges.push_back(e);
  }
  return SimplicialComplex::from_faces(m, edges);
}

// Boundary of the (d+1)-simplex, a d-sphere.
SimplicialComplex simplex_boundary(int d) {
  std::vector<Simplex> faces;
  for (int skip = 0; skip <= d + 1; ++skip) {
    Simplex f;
    for (int v = 0; v <= d + 1; ++v)
      if (v != skip) f.push_back(v);
    faces.push_back(f);
  }
  return SimplicialComplex::from_faces(d + 2, faces);
}

// Six-vertex triangulation of the real projective plane.
SimplicialComplex rp2() {
  return SimplicialComplex::from_faces(6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5}, {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}});
}

}  // namespace

TEST_CASE("complex construction", "[homology]") {
  const auto k = SimplicialComplex::from_faces(4, {{0, 1, 2}, {2, 3}});
  CHECK(k.f_vector() == std::vector<long long>{4, 4, 1});
  CHECK(k.dimension() == 2);
  CHECK_FALSE(k.is_pure());
  CHECK(k.contains({0, 2}));
  CHECK_FALSE(k.contains({1, 3}));
  CHECK(k.maximal_faces().size() == 2);
}

TEST_CASE("Betti numbers over GF(2)", "[homology]") {
  const auto triangle = betti_gf2(cycle(3));
  CHECK(triangle.betti == std::vector<long long>{1, 1});
  CHECK(triangle.euler_consistent);

  const auto solid = betti_gf2(SimplicialComplex::from_faces(4, {{0, 1, 2, 3}}));
  CHECK(solid.betti == std::vector<long long>{1, 0, 0, 0});

  CHECK(betti_gf2(cycle(6)).betti == std::vector<long long>{1, 1});
  for (int d = 0; d <= 4; ++d) CHECK(betti_gf2(simplex_boundary(d)).betti == oracle::sphere_betti(d));

  // Over GF(2) the projective plane looks like a homology sphere in degree 2.
  const auto p = betti_gf2(rp2());
  CHECK(p.betti == std::vector<long long>{1, 1, 1});
  CHECK(p.euler == 1);

  const auto two = SimplicialComplex::from_faces(4, {{0, 1}, {2, 3}});
  CHECK(betti_gf2(two).betti == std::vector<long long>{2, 0});
}

TEST_CASE("sphere certification", "[homology]") {
  CHECK(is_sphere_profile(cycle(6), 1));
  CHECK(is_sphere_profile(SimplicialComplex::from_faces(2, {{0}, {1}}), 0));
  CHECK_FALSE(is_sphere_profile(SimplicialComplex::from_faces(3, {{0, 1, 2}}), 1));
  CHECK(is_sphere_profile(simplex_boundary(3), 3));
  CHECK_FALSE(is_sphere_profile(rp2(), 2));
  // Two circles sharing a vertex: right dimension, wrong homology.
  CHECK_FALSE(is_sphere_profile(SimplicialComplex::from_faces(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}}), 1));
}

TEST_CASE("Euler characteristic", "[homology]") {
  CHECK(euler_characteristic(SimplicialComplex::from_faces(2, {{0}, {1}})) == 2);
  CHECK(euler_characteristic(cycle(6)) == 0);
  CHECK(euler_characteristic(SimplicialComplex::from_faces(1, {{0}})) == 1);
}
