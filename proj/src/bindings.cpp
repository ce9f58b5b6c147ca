#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "loopdual/cli.hpp"
#include "loopdual/equivariant.hpp"

namespace py = pybind11;
using namespace loopdual;

namespace {

RunConfig config(const std::string& name, std::vector<std::string> rings, int truncation) {
  RunConfig cfg;
  cfg.preset = name;
  cfg.rings = std::move(rings);
  cfg.truncation = truncation;
  return cfg;
}

// Runs a command and returns (exit code, stdout, stderr).
py::tuple run(int (*command)(const RunConfig&, std::ostream&), const RunConfig& cfg) {
  std::ostringstream out, err;
  int code;
  {
    py::gil_scoped_release release;
    code = run_guarded(command, cfg, out, err);
  }
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_loopdual, m) {
  m.doc() = "Centralizer presentations and loop-space series for reductive root data";
  m.attr("SCHEMA_VERSION") = kSchemaVersion;

  // translators run most recent first, so the base class goes first
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  m.def("preset_names", &preset_names);
  m.def("exponents", [](const std::string& name) { return exponents(preset(name)); });
  m.def("n_G", [](const std::string& name) { return compute_nG(preset(name)); });
  m.def("degree_d_ad", [](const std::string& name) {
    const RootDatum d = preset(name);
    return degree_dV(d, adjoint_rep(d));
  });
  m.def(
      "omega_poincare",
      [](const std::string& name, int truncation) { return omega_poincare(preset(name), truncation).series.coefficients; },
      py::arg("name"), py::arg("truncation") = 40);
  m.def(
      "centralizer_series",
      [](const std::string& name, const std::string& ring, int truncation) {
        PresentOptions opts;
        opts.truncation = truncation;
        return present_centralizer(preset(name), Ring::parse(ring), opts).hilbert.coefficients;
      },
      py::arg("name"), py::arg("ring") = "Q", py::arg("truncation") = 40);

  m.def(
      "run_datum_info", [](const std::string& name) { return run(cmd_datum_info, config(name, {}, 40)); },
      py::arg("name"));
  m.def(
      "run_centralizer",
      [](const std::string& name, std::vector<std::string> rings, int truncation) {
        return run(cmd_centralizer, config(name, std::move(rings), truncation));
      },
      py::arg("name"), py::arg("rings") = std::vector<std::string>{"Q"}, py::arg("truncation") = 40);
  m.def(
      "run_check_all",
      [](int max_rank, int truncation) {
        RunConfig cfg = config("", {}, truncation);
        cfg.max_rank = max_rank;
        return run(cmd_check_all, cfg);
      },
      py::arg("max_rank") = 2, py::arg("truncation") = 40);
}
