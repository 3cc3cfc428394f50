#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "macp/flags.hpp"
#include "macp/io.hpp"
#include "macp/suites.hpp"

namespace py = pybind11;
using namespace macp;

namespace {

// Matrices cross the boundary as nested lists of "p/q" strings.
using TextMatrix = std::vector<std::vector<std::string>>;

Matrix from_text(const TextMatrix& rows) {
  std::vector<std::vector<Rational>> values;
  for (const auto& row : rows) {
    values.emplace_back();
    for (const auto& e : row) values.back().push_back(parse_rational(e));
  }
  return Matrix::from_rows(values);
}

TextMatrix to_text(const Matrix& m) {
  TextMatrix out(static_cast<std::size_t>(m.rows()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out[static_cast<std::size_t>(i)].push_back(to_string(m.at(i, j)));
  return out;
}

std::optional<std::pair<std::string, std::string>> as_pair(const std::optional<Violation>& v) {
  if (!v) return std::nullopt;
  return std::make_pair(v->rule, v->detail);
}

std::vector<std::string> words(const std::vector<SignVector>& vs) {
  std::vector<std::string> out;
  for (const auto& v : vs) out.push_back(v.str());
  return out;
}

std::vector<std::string> keys(const std::vector<Rank2OM>& oms) {
  std::vector<std::string> out;
  for (const auto& m : oms) out.push_back(m.key());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact rank-2 oriented matroid posets (elements are 0-based; text formats are 1-based)";

  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<MathError>(m, "MathError", m.attr("Error").ptr());
  py::register_exception<ResourceError>(m, "ResourceError", m.attr("Error").ptr());

  py::class_<Rank2OM>(m, "Rank2OM")
      .def_static("parse", &Rank2OM::parse)
      .def_property_readonly("key", &Rank2OM::key)
      .def_property_readonly("n", &Rank2OM::size)
      .def_property_readonly("loops", &Rank2OM::loops)
      .def_property_readonly("num_classes", &Rank2OM::num_classes)
      .def_property_readonly("num_nonloops", &Rank2OM::num_nonloops)
      .def_property_readonly("classes",
                             [](const Rank2OM& om) {
                               std::vector<std::vector<std::pair<int, int>>> out;
                               for (const auto& c : om.classes()) {
                                 out.emplace_back();
                                 for (const auto& e : c) out.back().emplace_back(e.element, static_cast<int>(e.sign));
                               }
                               return out;
                             })
      .def("chi", [](const Rank2OM& om, int i, int j) { return static_cast<int>(om.chi(i, j)); })
      .def("chirotope", [](const Rank2OM& om) { return om.chirotope().str(); })
      .def("__str__", &Rank2OM::key)
      .def("__repr__", [](const Rank2OM& om) { return "Rank2OM('" + om.key() + "')"; })
      .def("__eq__", [](const Rank2OM& a, const Rank2OM& b) { return a == b; })
      .def("__hash__", [](const Rank2OM& om) { return py::hash(py::str(om.key())); });

  py::class_<FlagOM>(m, "FlagOM")
      .def_static("parse", &FlagOM::parse)
      .def_property_readonly("key", &FlagOM::key)
      .def_property_readonly("z", [](const FlagOM& f) { return f.z().str(); })
      .def_property_readonly("M", &FlagOM::M)
      .def("__str__", &FlagOM::key)
      .def("__repr__", [](const FlagOM& f) { return "FlagOM('" + f.key() + "')"; })
      .def("__eq__", [](const FlagOM& a, const FlagOM& b) { return a == b; })
      .def("__hash__", [](const FlagOM& f) { return py::hash(py::str(f.key())); });

  m.def("_mu", [](const TextMatrix& x) { return mu(from_text(x)); });
  m.def("_nu", [](const TextMatrix& y, const TextMatrix& x) { return nu(from_text(y), from_text(x)); });
  m.def("canonical_form", [](const std::string& chi) { return canonical_form(Chirotope2::parse(chi)); },
        py::arg("chirotope_text"));
  m.def("covectors", [](const Rank2OM& om) { return words(covectors(om)); });
  m.def("cocircuits", [](const Rank2OM& om) { return words(cocircuits(om)); });
  m.def("validate_covector_axioms", [](const std::vector<std::string>& vs) {
    std::vector<SignVector> parsed;
    for (const auto& v : vs) parsed.push_back(SignVector::parse(v));
    return as_pair(validate_covector_axioms(parsed));
  });
  m.def("validate_grassmann_plucker",
        [](const std::string& chi) { return as_pair(validate_grassmann_plucker(Chirotope2::parse(chi))); });
  m.def("check_basis_orientation", [](const Rank2OM& om) { return as_pair(check_basis_orientation(om)); });
  m.def("reorient", &reorient);
  m.def("relabel", &relabel);
  m.def("parallel_class", &parallel_class);
  m.def("convex_hull", &convex_hull);
  m.def("rank_h", &rank_h);
  m.def("coatoms_CR", [](const Rank2OM& om) { return coatoms_CR(om); });
  m.def("weak_leq", &weak_leq);
  m.def("weak_leq_chirotope", &weak_leq_chirotope);

  m.def(
      "enumerate_macp2",
      [](int n) {
        const auto p = enumerate_macp2(n);
        py::dict out;
        out["elements"] = keys(p.elements);
        out["rank"] = p.rank;
        out["hasse"] = p.poset.hasse();
        out["f_vector"] = p.f_vector();
        return out;
      },
      py::arg("n"));
  m.def(
      "enumerate_macp12",
      [](int n) {
        const auto p = enumerate_macp12(n);
        std::vector<std::string> flags;
        for (const auto& f : p.elements) flags.push_back(f.key());
        py::dict out;
        out["elements"] = flags;
        out["rank"] = p.rank;
        out["hasse"] = p.poset.hasse();
        out["f_vector"] = p.f_vector();
        return out;
      },
      py::arg("n"));

  m.def("_sample_cell", [](const Rank2OM& om, int count, std::uint64_t seed) {
    std::vector<TextMatrix> out;
    for (const auto& x : sample_cell(om, count, seed)) out.push_back(to_text(x));
    return out;
  });
  m.def("_sample_boundary", [](const Rank2OM& om, const Rank2OM& face, int count, std::uint64_t seed) {
    const auto r = sample_boundary(om, face, count, seed);
    std::vector<TextMatrix> samples;
    for (const auto& x : r.samples) samples.push_back(to_text(x));
    return py::make_tuple(samples, r.perturbations, r.failures);
  });
  m.def("cell_dimension", [](const Rank2OM& om) { return cell_chart(om).dimension(); });
  m.def("_sample_flag_cell", [](const FlagOM& f, int count, std::uint64_t seed) {
    std::vector<std::pair<TextMatrix, TextMatrix>> out;
    for (const auto& [y, x] : sample_flag_cell(f, count, seed)) out.emplace_back(to_text(y), to_text(x));
    return out;
  });
  m.def("flag_cell_dimension", &flag_cell_dimension);
  m.def("flag_rank", &flag_rank);
  m.def(
      "iota_embed",
      [](const FlagOM& f, std::optional<std::string> anchor) {
        std::optional<SignVector> a;
        if (anchor) a = SignVector::parse(*anchor);
        return iota_embed(f, a);
      },
      py::arg("flag"), py::arg("anchor") = py::none());
  m.def("max_covector_below",
        [](const Rank2OM& m1, const std::string& z2) { return max_covector_below(m1, SignVector::parse(z2)).str(); });

  m.def(
      "lower_interval_homology",
      [](const Rank2OM& om) {
        const auto p = enumerate_macp2(om.size());
        return homology_report(order_complex(lower_interval(p, om).proper_part()), rank_h(om) - 1).dump();
      },
      py::arg("om"));
  m.def(
      "macp_homology",
      [](int n, const std::string& kind) {
        Poset p = kind == "macp1" ? enumerate_macp1(n) : enumerate_macp2(n).poset;
        return homology_report(order_complex(p), -1).dump();
      },
      py::arg("n"), py::arg("kind") = "macp2");

  m.def("suite_names", &suite_names);
  m.def(
      "_run_suite",
      [](const std::string& name, int n, std::uint64_t seed) {
        SuiteOptions o;
        o.seed = seed;
        return to_json(run_suite(name, n, o)).dump();
      },
      py::arg("name"), py::arg("n"), py::arg("seed") = 0);
}
