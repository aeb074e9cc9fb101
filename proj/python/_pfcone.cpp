#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "pfcone/cli.hpp"
#include "pfcone/error.hpp"

namespace py = pybind11;
using pfcone::Json;
using pfcone::cli::Request;

namespace {

// JSON text in, JSON text out; the Python layer does the (de)serialization.
std::string call(Request r, const std::string& matrix, const std::optional<std::string>& b,
                 const std::optional<std::string>& x) {
  r.matrix = pfcone::parse_json_exact(matrix);
  if (b) r.b = pfcone::parse_json_exact(*b);
  if (x) r.x = pfcone::parse_json_exact(*x);
  return pfcone::cli::evaluate(r).dump();
}

Request make(const std::string& verb, const std::string& mode) {
  Request r;
  r.verb = verb;
  r.mode = mode;
  return r;
}

}  // namespace

PYBIND11_MODULE(_pfcone, m) {
  m.doc() = "JSON-level bindings of the pfcone core";

  py::register_exception<pfcone::InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<pfcone::PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<pfcone::NumericFailure>(m, "NumericFailure", PyExc_ArithmeticError);
  py::register_exception<pfcone::ModeMismatch>(m, "ModeMismatch", PyExc_ArithmeticError);
  py::register_exception<pfcone::InternalInconsistency>(m, "InternalInconsistency", PyExc_RuntimeError);

  m.def("analyze", [](const std::string& matrix, const std::string& mode) {
    return call(make("analyze", mode), matrix, std::nullopt, std::nullopt);
  }, py::arg("matrix"), py::arg("mode") = "auto");

  for (const char* verb : {"solve1", "solve2"}) {
    std::string v = verb;
    m.def(verb, [v](const std::string& matrix, const std::string& lambda, const std::string& b,
                    const std::string& mode) {
      Request r = make(v, mode);
      r.lambda = lambda;
      return call(r, matrix, b, std::nullopt);
    }, py::arg("matrix"), py::arg("lam"), py::arg("b"), py::arg("mode") = "auto");
  }

  m.def("cw", [](const std::string& matrix, const std::optional<std::string>& x, const std::string& mode) {
    return call(make("cw", mode), matrix, std::nullopt, x);
  }, py::arg("matrix"), py::arg("x") = std::nullopt, py::arg("mode") = "auto");

  m.def("alt", [](const std::string& matrix, const std::string& shift, const std::string& x,
                  std::optional<int> max_steps, const std::string& mode) {
    Request r = make("alt", mode);
    r.shift = shift;
    r.max_steps = max_steps;
    return call(r, matrix, std::nullopt, x);
  }, py::arg("matrix"), py::arg("shift"), py::arg("x"), py::arg("max_steps") = std::nullopt,
        py::arg("mode") = "auto");

  m.def("check", [](const std::string& matrix, const std::string& property, const std::string& mode) {
    Request r = make("check", mode);
    r.property = property;
    return call(r, matrix, std::nullopt, std::nullopt);
  }, py::arg("matrix"), py::arg("property"), py::arg("mode") = "auto");

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::vector<const char*> argv{"pfcone"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = pfcone::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
}
