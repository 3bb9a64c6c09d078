// Python bindings: interval kernel, proof drivers returning report JSON text.
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tangency/cones.hpp"
#include "tangency/config.hpp"
#include "tangency/errors.hpp"
#include "tangency/interval.hpp"
#include "tangency/report.hpp"
#include "tangency/toy_model.hpp"

namespace py = pybind11;
using namespace tangency;

namespace {

ProofConfig make_config(std::optional<double> param_radius, const std::vector<std::string>& grids,
                        std::size_t threads) {
  ProofConfig cfg;
  cfg.param_radius = param_radius;
  for (const auto& g : grids) apply_grid_spec(cfg, g);
  cfg.threads = threads;
  cfg.validate();
  return cfg;
}

IntervalMatrix matrix_from_pairs(const std::vector<std::vector<std::pair<double, double>>>& rows) {
  const std::size_t n = rows.size();
  IntervalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw ShapeError("matrix must be square");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Interval(rows[i][j].first, rows[i][j].second);
  }
  return m;
}

}  // namespace

PYBIND11_MODULE(_tangency, m) {
  m.doc() = "Interval kernel and proof drivers";

  auto base = py::register_exception<Error>(m, "TangencyError");
  py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<ShapeError>(m, "ShapeError", base.ptr());

  py::class_<Interval>(m, "Interval")
      .def(py::init<double>())
      .def(py::init<double, double>())
      .def_static("from_decimal", [](const std::string& s) { return Interval::from_decimal(s); })
      .def_property_readonly("lo", &Interval::lo)
      .def_property_readonly("hi", &Interval::hi)
      .def("mid", &Interval::mid)
      .def("width", &Interval::width)
      .def("contains", py::overload_cast<double>(&Interval::contains, py::const_))
      .def("subset_of", &Interval::subset_of)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__repr__", [](const Interval& x) {
        std::ostringstream s;
        s.precision(17);
        s << "Interval(" << x.lo() << ", " << x.hi() << ")";
        return s.str();
      });

  m.def("sqrt", [](const Interval& x) { return sqrt(x); });
  m.def("sin", [](const Interval& x) { return sin(x); });
  m.def("cos", [](const Interval& x) { return cos(x); });
  m.def("atan", [](const Interval& x) { return atan(x); });
  m.def("pi", [] { return pi(); });

  m.def("transversality_determinant", &transversality_determinant, py::arg("g_a"), py::arg("g_tt"), py::arg("g_ta"));

  m.def(
      "positive_definite",
      [](const std::vector<std::vector<std::pair<double, double>>>& rows) {
        return rump_positive_definite(matrix_from_pairs(rows)).positive_definite;
      },
      py::arg("rows"), "Rump vertex test on a symmetric matrix of (lo, hi) pairs.");

  m.def(
      "prove_henon_json",
      [](std::optional<double> param_radius, const std::vector<std::string>& grids, std::size_t threads) {
        const ProofConfig cfg = make_config(param_radius, grids, threads);
        TangencyCertificate cert;
        {
          py::gil_scoped_release release;
          cert = run_proof(cfg.henon, cfg.proof_options());
        }
        return henon_report(cfg, cert).dump();
      },
      py::arg("param_radius") = py::none(), py::arg("grids") = std::vector<std::string>{}, py::arg("threads") = 1);

  m.def(
      "check_toy_json",
      [](double lambda, double mu, double delta, double epsilon, std::size_t k, std::size_t s) {
        ProofConfig cfg;
        cfg.proof = "toy";
        cfg.toy = ToyModelParams{lambda, mu, delta, epsilon};
        cfg.toy_k = k;
        cfg.toy_s = s;
        cfg.validate();
        ToyReport r;
        {
          py::gil_scoped_release release;
          r = check_toy(cfg.toy, k, s);
        }
        return toy_report(cfg, r).dump();
      },
      py::arg("lambda_") = 2.0, py::arg("mu") = 0.5, py::arg("delta") = 0.5, py::arg("epsilon") = 0.01,
      py::arg("k") = 3, py::arg("s") = 3);
}
