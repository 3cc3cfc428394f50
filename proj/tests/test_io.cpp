#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "macp/io.hpp"
#include "macp/suites.hpp"

using namespace macp;

TEST_CASE("rationals and matrices in JSON", "[io]") {
  CHECK(rational_from_json(Json("3/6")) == Rational(1, 2));
  CHECK(rational_from_json(Json(-4)) == Rational(-4));
  CHECK(to_string(Rational(-3, 9)) == "-1/3");
  CHECK(parse_rational("7") == Rational(7));
  CHECK_THROWS_AS(rational_from_json(Json(0.5)), ParseError);
  CHECK_THROWS_AS(rational_from_json(Json("1/0")), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);

  const Matrix m = parse_matrix("[[1,\"1/2\"],[0,-3]]");
  CHECK(m.rows() == 2);
  CHECK(m.at(0, 1) == Rational(1, 2));
  CHECK(matrix_from_json(matrix_to_json(m)) == m);
  CHECK(parse_matrix("[1,2,3]").rows() == 1);
  CHECK_THROWS_AS(parse_matrix("[[1,2],[3]]"), ParseError);
}

TEST_CASE("poset and complex export", "[io]") {
  const Poset p = build_poset({"a", "b", "c"}, [](int x, int y) { return x == y || x == 0; });
  const Json j = poset_to_json(p);
  CHECK(j["elements"].size() == 3);
  CHECK(j["hasse"].size() == 2);
  CHECK(j["bottom"] == 0);
  CHECK(j["top"].is_null());
  const std::string dot = poset_to_dot(p);
  CHECK(dot.rfind("digraph", 0) == 0);

  const auto k = SimplicialComplex::from_faces(4, {{0, 1, 2}, {2, 3}});
  CHECK(complex_from_json(complex_to_json(k)).f_vector() == k.f_vector());
  const Json h = homology_report(SimplicialComplex::from_faces(3, {{0, 1}, {1, 2}, {0, 2}}), 1);
  CHECK(h["betti"] == Json::array({1, 1}));
  CHECK(h["sphere_check"] == true);
}

TEST_CASE("suites run and report", "[io]") {
  for (const auto& name : suite_names()) {
    const SuiteReport r = run_suite(name, 3, {.samples = 5});
    INFO(name);
    CHECK(r.passed());
    CHECK(r.checked > 0);
    CHECK(to_json(r)["suite"] == name);
  }
  CHECK_THROWS_AS(run_suite("nope", 3), std::invalid_argument);
}
