#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "skeinwb/catalog.hpp"
#include "skeinwb/dual.hpp"
#include "skeinwb/errors.hpp"
#include "skeinwb/skein.hpp"
#include "skeinwb/suites.hpp"
#include "skeinwb/transport.hpp"

namespace py = pybind11;
using namespace skeinwb;

namespace {

using Matrix = std::array<std::array<cd, 2>, 2>;

Representation to_rep(const std::vector<Matrix>& images) {
  std::vector<SL2> out;
  for (const auto& m : images) out.emplace_back(m[0][0], m[0][1], m[1][0], m[1][1]);
  return Representation(std::move(out));
}

std::string bracket(const std::string& diagram_json, const std::string& ring) {
  LaurentSkein s = resolve(parse_diagram(diagram_json));
  if (ring == "dual") return to_string(to_exact_dual(s));
  if (ring != "laurent") throw std::invalid_argument("ring must be 'laurent' or 'dual'");
  return to_string(s);
}

std::vector<std::string> suite_json(const std::string& which, std::uint64_t seed, int samples) {
  SuiteOptions o;
  o.seed = seed;
  o.samples = samples;
  std::vector<std::string> out;
  for (const Record& r : run_suite(which, o)) out.push_back(r.to_json().dump());
  return out;
}

}  // namespace

PYBIND11_MODULE(_skeinwb, m) {
  m.doc() = "Skein module workbench bindings";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<CalibrationFailure>(m, "CalibrationFailure", PyExc_RuntimeError);

  m.def("bracket", &bracket, py::arg("diagram_json"), py::arg("ring") = "laurent",
        "Resolve a diagram given as JSON text and return the normal form as a string.");
  m.def("builtin_diagram_json", [](const std::string& name) { return to_json_string(builtin_diagram(name)); });
  m.def("builtin_diagram_names", [] {
    std::vector<std::string> names;
    for (const auto& [n, d] : builtin_diagrams()) names.push_back(n);
    return names;
  });
  m.def("eval_dual", [](const std::string& laurent) {
    DualScalar x = eval_dual(parse_laurent(laurent));
    return std::pair{x.value, x.deriv};
  });
  m.def("divergence",
        [](const std::string& word, const std::vector<Matrix>& images, int gen) {
          return divergence(GroupWord::parse(word), to_rep(images), gen);
        },
        py::arg("word"), py::arg("images"), py::arg("gen"));
  m.def("f_and_fprime",
        [](const std::string& word, int gen, std::size_t occurrence, const std::vector<Matrix>& images) {
          FValues v = f_and_fprime(GroupWord::parse(word), gen, occurrence, to_rep(images));
          return std::pair{v.f, v.f_prime};
        },
        py::arg("word"), py::arg("gen"), py::arg("occurrence"), py::arg("images"),
        "f and f' for the handle slide at the given 0-based occurrence.");
  m.def("calibrate_kappa", [](std::uint64_t seed) { return calibrate_kappa(genus1_calibration_cases(seed)); },
        py::arg("seed") = 1);
  m.def("suite_names", &suite_names);
  m.def("run_suite_json", &suite_json, py::arg("which") = "all", py::arg("seed") = 1, py::arg("samples") = 20);
}
