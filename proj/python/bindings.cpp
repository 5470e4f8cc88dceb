#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <random>

#include "vknot/alexander.hpp"
#include "vknot/braids.hpp"
#include "vknot/catalog.hpp"
#include "vknot/codes.hpp"
#include "vknot/diagram_moves.hpp"
#include "vknot/error.hpp"
#include "vknot/finite_algebra.hpp"
#include "vknot/homology.hpp"
#include "vknot/json.hpp"
#include "vknot/moves.hpp"
#include "vknot/planar_diagram.hpp"
#include "vknot/quaternion.hpp"
#include "vknot/report.hpp"
#include "vknot/state_sum.hpp"

namespace py = pybind11;
using namespace vknot;

namespace {

py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

GaussCode code_of(const py::object& o) {
  if (py::isinstance<GaussCode>(o)) return o.cast<GaussCode>();
  return resolve_code(o.cast<std::string>());
}

PlanarDiagram diagram_of(const std::string& text) {
  for (const auto& e : builtin_catalog())
    if (e.name == text && e.diagram) return *e.diagram;
  return parse_pd(text);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Virtual knot invariants, biracks and virtual braids";
  m.attr("__version__") = kToolVersion;

  py::register_exception<Error>(m, "VknotError", PyExc_ValueError);

  py::class_<GaussCode>(m, "GaussCode")
      .def(py::init([](const std::string& text) { return parse_gauss(text); }), py::arg("text") = "")
      .def_property_readonly("chord_count", &GaussCode::chord_count)
      .def_property_readonly("component_count", &GaussCode::component_count)
      .def_property_readonly("writhe", &GaussCode::writhe)
      .def("to_json", [](const GaussCode& c) { return to_python(Json(c)); })
      .def("__str__", &GaussCode::to_string)
      .def("__repr__", [](const GaussCode& c) { return "GaussCode('" + c.to_string() + "')"; })
      .def("__eq__", [](const GaussCode& a, const GaussCode& b) { return a == b; })
      .def("__hash__", [](const GaussCode& c) { return py::hash(py::str(c.to_string())); });

  m.def("resolve", [](const std::string& s) { return resolve_code(s); }, py::arg("name_or_code"),
        "Catalog name or Gauss code text to a GaussCode");
  m.def("catalog", [] {
    Json list = Json::array();
    for (const auto& e : builtin_catalog()) {
      Json expected = Json::object();
      for (const auto& [k, v] : e.expected) expected[k] = v;
      list.push_back(Json{{"name", e.name}, {"encoding", e.encoding}, {"note", e.note}, {"expected", expected}});
    }
    return to_python(list);
  });

  m.def("f_polynomial", [](const py::object& c) { return f_polynomial(code_of(c)).to_string(); }, py::arg("code"));
  m.def("bracket", [](const py::object& c) { return bracket(code_of(c)).to_string(); }, py::arg("code"));
  m.def("carrier_genus", [](const py::object& c) { return carrier_genus(code_of(c)); }, py::arg("code"));
  m.def("generalized_alexander", [](const py::object& c) { return generalized_alexander(code_of(c)).to_string(); },
        py::arg("code"));
  m.def("alexander_ideal_gcd", [](const py::object& c, std::size_t codim) {
        return elementary_ideal_gcd(relation_matrix(code_of(c)), codim).to_string();
      }, py::arg("code"), py::arg("codim") = 1);
  m.def("study_invariant", [](const py::object& c) { return study_invariant(code_of(c)).to_string(); },
        py::arg("code"));
  m.def("quaternionic_gcd", [](const py::object& c) { return quaternionic_gcd(code_of(c)).to_string(); },
        py::arg("code"));
  m.def("virtualize", [](const py::object& c, int chord) { return virtualize(code_of(c), chord); }, py::arg("code"),
        py::arg("chord"));
  m.def("switch_crossing", [](const py::object& c, int chord) { return switch_crossing(code_of(c), chord); },
        py::arg("code"), py::arg("chord"));

  m.def("invariants", [](const py::object& c, std::optional<std::vector<std::string>> names) {
        const auto code = code_of(c);
        return to_python(invariant_report(code, names.value_or(invariant_names()), code.to_string()));
      }, py::arg("code"), py::arg("names") = py::none(), "Invariant report as a dict");
  m.def("distinguish", [](const py::object& a, const py::object& b) {
        const auto ca = code_of(a), cb = code_of(b);
        return to_python(to_json(distinguish(ca, cb), ca.to_string(), cb.to_string()));
      }, py::arg("a"), py::arg("b"));
  m.def("simplify", [](const py::object& c, int budget) {
        const auto res = simplify(code_of(c), budget);
        return py::make_tuple(res.code, to_python(Json(res.certificate)), res.exhausted);
      }, py::arg("code"), py::arg("budget") = 4, "(code, certificate, exhausted)");

  m.def("colorings", [](const py::object& c, const std::string& birack) {
        return colorings(code_of(c), named_birack(birack));
      }, py::arg("code"), py::arg("birack"));
  m.def("homology", [](const std::string& birack, std::size_t degree, bool quotient) {
        const auto complex = boundary_matrices(named_birack(birack), degree + 1);
        return to_python(Json(homology(complex, degree,
                                       quotient ? HomologyVariant::BiquandleQuotient : HomologyVariant::Full)));
      }, py::arg("birack"), py::arg("degree"), py::arg("quotient") = false);

  m.def("close_braid", [](const std::string& word, int n) { return close_braid(parse_braid(word, n)); },
        py::arg("word"), py::arg("strands"));
  m.def("rho_image", [](const std::string& word, int n) { return to_python(Json(rho_image(parse_braid(word, n)))); },
        py::arg("word"), py::arg("strands"));
  m.def("verify_presentation", [](int n) { return to_python(Json(verify_presentation(n))); }, py::arg("strands"));
  m.def("flat_quotient", [](const std::string& word, int n) { return flat_quotient(parse_braid(word, n)).to_string(); },
        py::arg("word"), py::arg("strands"));

  m.def("virtual_parity", [](const std::string& diagram, std::size_t moves, std::uint64_t seed) {
        auto pd = diagram_of(diagram);
        std::mt19937_64 rng(seed);
        for (std::size_t k = 0; k < moves; ++k)
          if (!apply_random_flat_move(pd, rng)) break;
        return inter_component_virtual_parity(pd);
      }, py::arg("diagram"), py::arg("moves") = 0, py::arg("seed") = 1,
        "Inter-component virtual crossing parity of a catalog diagram or PD text, after random flat moves");
}
