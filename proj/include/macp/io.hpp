#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "macp/flags.hpp"
#include "macp/homology.hpp"
#include "macp/poset.hpp"
#include "macp/rational.hpp"

namespace macp {

using Json = nlohmann::json;

// Rationals travel as "p/q" strings; bare JSON integers are accepted on input.
Rational rational_from_json(const Json& j);
Json rational_to_json(const Rational& q);
Matrix matrix_from_json(const Json& j);  // [[...], ...] or a single row [...]
Json matrix_to_json(const Matrix& m);
Matrix parse_matrix(const std::string& text);

// { "elements": [...], "hasse": [[i,j],...], "bottom": idx|null, "top": idx|null }
Json poset_to_json(const Poset& p);
std::string poset_to_dot(const Poset& p);

// List of maximal faces as sorted vertex-index arrays.
Json complex_to_json(const SimplicialComplex& k);
SimplicialComplex complex_from_json(const Json& j);

// { "f_vector": [...], "betti": [...], "euler": k, "sphere_check": bool }
Json homology_report(const SimplicialComplex& k, int sphere_dimension);

}  // namespace macp
