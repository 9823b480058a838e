// Python face of the library. Drawings cross the boundary as document
// strings; reports come back as JSON text and are decoded in __init__.py.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "oneplane/analysis.hpp"
#include "oneplane/bounds.hpp"
#include "oneplane/certifier.hpp"
#include "oneplane/document.hpp"
#include "oneplane/enumerate.hpp"
#include "oneplane/generators.hpp"
#include "oneplane/render.hpp"
#include "oneplane/report.hpp"

namespace py = pybind11;
using namespace oneplane;

namespace {

std::pair<long long, long long> frac(const Rational& q) { return {q.numerator(), q.denominator()}; }

OnePlaneDrawing generate(const std::string& kind, int arg) {
  if (kind == "k4") return gen_k4(arg != 0);
  if (kind == "k4-pair") return gen_k4_pair();
  if (kind == "cycle4") return gen_cycle4();
  if (kind == "hermit") return gen_hermit_gadget(arg ? arg : 1);
  if (kind == "exceptional") return gen_exceptional(arg);
  if (kind == "template") return exceptional_template(arg);
  if (kind == "double-exceptional") return gen_double_exceptional();
  throw std::invalid_argument("unknown generator: " + kind);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Maximal 1-plane drawings: analysis, certificates, density bound.";

  py::register_exception<DocumentError>(m, "DocumentError", PyExc_ValueError);
  py::register_exception<DrawingError>(m, "DrawingError", PyExc_ValueError);
  py::register_exception<ProofGapError>(m, "ProofGapError", PyExc_RuntimeError);

  m.def("generate", [](const std::string& kind, int arg) { return serialize_drawing(generate(kind, arg)); },
        py::arg("kind"), py::arg("arg") = 0);
  m.def("random_tree", [](int n, std::uint64_t seed) { return serialize_drawing(random_tree(n, seed)); });
  m.def("saturate", [](const std::string& doc, std::uint64_t seed) {
    return serialize_drawing(saturate(parse_drawing(doc), seed));
  });
  m.def("canonicalize", [](const std::string& doc) { return serialize_drawing(parse_drawing(doc)); });
  m.def("is_maximal", [](const std::string& doc) { return is_maximal(parse_drawing(doc)).maximal; });
  m.def("analyze", [](const std::string& doc) { return dump(analyze_drawing(parse_drawing(doc)).report); });
  m.def("certify", [](const std::string& doc) {
    const OnePlaneDrawing s = skeleton(parse_drawing(doc)).skeleton;
    const Certificate c = certify(s);
    if (!verify_certificate(s, c).valid) throw std::runtime_error("certificate failed verification");
    return dump(certificate_json(s, c));
  });
  m.def("render_svg", [](const std::string& doc) { return render_svg(parse_drawing(doc)).svg; });
  m.def("census", [](int n) { return dump(census_json(enumerate_maximal(n))); });
  m.def("lp_minimum", [] { return frac(minimize_F().minimum); });
  m.def("density_lower_bound", [](long long N) { return frac(density_lower_bound(N)); });
  m.def("bounds_table", [](long long from, long long to) { return dump(bounds_table_json(from, to)); });
}
