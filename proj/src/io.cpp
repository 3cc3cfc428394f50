#include "macp/io.hpp"

#include <sstream>

namespace macp {

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw ParseError("matrix entries must be integers or \"p/q\" strings, got " + j.dump());
}

Json rational_to_json(const Rational& q) { return to_string(q); }

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix must be a nonempty JSON array");
  std::vector<std::vector<Rational>> rows;
  if (!j.front().is_array()) {
    rows.emplace_back();
    for (const auto& e : j) rows.back().push_back(rational_from_json(e));
  } else {
    for (const auto& row : j) {
      if (!row.is_array()) throw ParseError("matrix rows must be arrays");
      rows.emplace_back();
      for (const auto& e : row) rows.back().push_back(rational_from_json(e));
    }
  }
  return Matrix::from_rows(rows);
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(rational_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix parse_matrix(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid matrix JSON: ") + e.what());
  }
  return matrix_from_json(j);
}

Json poset_to_json(const Poset& p) {
  Json hasse = Json::array();
  for (const auto& [x, y] : p.hasse()) hasse.push_back({x, y});
  Json out;
  out["elements"] = p.labels();
  out["hasse"] = std::move(hasse);
  out["bottom"] = p.bottom() ? Json(*p.bottom()) : Json(nullptr);
  out["top"] = p.top() ? Json(*p.top()) : Json(nullptr);
  return out;
}

std::string poset_to_dot(const Poset& p) {
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n";
  for (int x = 0; x < p.size(); ++x) os << "  v" << x << " [label=" << Json(p.label(x)).dump() << "];\n";
  for (const auto& [x, y] : p.hasse()) os << "  v" << x << " -> v" << y << ";\n";
  os << "}\n";
  return os.str();
}

Json complex_to_json(const SimplicialComplex& k) { return k.maximal_faces(); }

SimplicialComplex complex_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("complex must be a JSON array of faces");
  std::vector<Simplex> faces;
  int vertices = 0;
  try {
    for (const auto& f : j) {
      faces.push_back(f.get<Simplex>());
      for (int v : faces.back()) {
        if (v < 0) throw ParseError("negative vertex index");
        vertices = std::max(vertices, v + 1);
      }
    }
  } catch (const Json::exception& e) {
    throw ParseError(std::string("invalid face list: ") + e.what());
  }
  try {
    return SimplicialComplex::from_faces(vertices, std::move(faces));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Json homology_report(const SimplicialComplex& k, int sphere_dimension) {
  const BettiProfile profile = betti_gf2(k);
  Json out;
  out["f_vector"] = profile.f_vector;
  out["betti"] = profile.betti;
  out["euler"] = profile.euler;
  out["euler_consistent"] = profile.euler_consistent;
  out["sphere_check"] = sphere_dimension >= 0 && is_sphere_profile(k, sphere_dimension);
  return out;
}

}  // namespace macp
