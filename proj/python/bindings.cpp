// Python bindings: the JSON op layer plus a few direct circle-group
// helpers. All unbounded numbers cross the boundary as decimal strings so
// nothing is ever rounded.

#include "tbtop/circle.hpp"
#include "tbtop/errors.hpp"
#include "tbtop/ops.hpp"

#include <pybind11/pybind11.h>

#include <string>

namespace py = pybind11;

namespace {

std::string run_json(const std::string& command, const std::string& params) {
  tbtop::json parsed;
  try {
    parsed = tbtop::json::parse(params);
  } catch (const nlohmann::json::exception& e) {
    throw tbtop::InputError(std::string("params: invalid JSON (") + e.what() +
                            ")");
  }
  return tbtop::ops::run_op(command, parsed).dump();
}

std::string report_json(const std::string& command, const std::string& params) {
  tbtop::json parsed;
  try {
    parsed = tbtop::json::parse(params);
  } catch (const nlohmann::json::exception& e) {
    throw tbtop::InputError(std::string("params: invalid JSON (") + e.what() +
                            ")");
  }
  return tbtop::ops::run_report(command, parsed).dump();
}

tbtop::CirclePoint parse_point(const std::string& text) {
  return tbtop::CirclePoint::parse(text, "point");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact circle-group characters, convergence certificates, and "
            "finite abelian group computations";
  m.attr("__version__") = tbtop::ops::kVersion;

  py::register_exception<tbtop::InputError>(m, "InputError",
                                            PyExc_ValueError);
  py::register_exception<tbtop::OpError>(m, "OpError", PyExc_RuntimeError);

  m.def("run", &run_json, py::arg("command"), py::arg("params"),
        "Run one operation (eval, certify, separate, distinguish, generate, "
        "validate, snf, quotient, subgroups, thm17, extend, dualcheck) on a "
        "JSON params string; returns the outputs as a JSON string.");
  m.def("run_report", &report_json, py::arg("command"), py::arg("params"),
        "Run one operation and return the full deterministic run report.");

  m.def(
      "circle_normalize",
      [](const std::string& num, const std::string& den) {
        return tbtop::CirclePoint::normalized(
                   tbtop::parse_bigint(num, "num"),
                   tbtop::parse_bigint(den, "den"))
            .str();
      },
      py::arg("num"), py::arg("den"),
      "Reduced representative of num/den mod 1, as 'num/den'.");
  m.def(
      "circle_add",
      [](const std::string& a, const std::string& b) {
        return (parse_point(a) + parse_point(b)).str();
      },
      py::arg("a"), py::arg("b"));
  m.def(
      "circle_scale",
      [](const std::string& m_text, const std::string& a) {
        return parse_point(a).scaled(tbtop::parse_bigint(m_text, "m")).str();
      },
      py::arg("m"), py::arg("a"));
  m.def(
      "circle_dist_to_zero",
      [](const std::string& a) {
        return tbtop::to_string(parse_point(a).dist_to_zero());
      },
      py::arg("a"), "Exact distance to 0 as a rational string.");
}
