#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hydrogen1d/analytic_core.hpp"
#include "hydrogen1d/extension_solver.hpp"
#include "hydrogen1d/serialize.hpp"
#include "hydrogen1d/special_functions.hpp"
#include "hydrogen1d/suite.hpp"
#include "hydrogen1d/verification.hpp"

namespace py = pybind11;
using namespace hydrogen1d;

namespace {

GridSpec make_grid(double L, double epsilon, double step, double max_step, bool raw) {
  GridSpec g;
  g.halfwidth_L = L;
  g.epsilon = epsilon;
  g.step = step;
  g.max_step = max_step;
  g.value_mode = raw ? BoundaryValueMode::raw : BoundaryValueMode::frobenius;
  return g;
}

ExtensionParams make_params(std::optional<double> theta, bool dirichlet) {
  if (dirichlet) {
    if (theta) throw std::invalid_argument("theta and dirichlet are exclusive");
    return ExtensionParams::dirichlet();
  }
  return ExtensionParams::rotation(theta.value_or(0.0));
}

py::dict level_dict(const SpectrumLevel& l) {
  py::dict d;
  d["energy"] = l.energy;
  d["multiplicity"] = l.multiplicity;
  d["parity"] = to_string(l.parity);
  d["regularity_defect"] = l.regularity_defect;
  return d;
}

py::dict check_dict(const CheckResult& c) {
  py::dict d;
  d["name"] = c.name;
  d["measured"] = c.measured;
  d["tolerance"] = c.tolerance;
  d["passed"] = c.passed;
  d["detail"] = c.detail;
  return d;
}

py::dict report_dict(const VerificationReport& r) {
  py::list checks;
  for (const auto& c : r.checks) checks.append(check_dict(c));
  py::dict d;
  d["checks"] = checks;
  d["all_passed"] = r.all_passed;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "One-dimensional hydrogen atom: closed forms, extension solver and checks";

  py::register_exception<RangeError>(m, "RangeError", PyExc_OverflowError);
  py::register_exception<SeriesError>(m, "SeriesError", PyExc_ArithmeticError);
  py::register_exception<BracketExhausted>(m, "BracketExhausted", PyExc_RuntimeError);
  py::register_exception<IntegrationError>(m, "IntegrationError", PyExc_RuntimeError);

  m.def("laguerre_std", &laguerre_std, py::arg("n"), py::arg("m"), py::arg("z"));
  m.def("laguerre_paper", &laguerre_paper, py::arg("n"), py::arg("z"));
  m.def(
      "kummer_1f1",
      [](double a, double b, double z, int max_terms, double rel_tol) {
        return kummer_1f1(a, b, z, SeriesControl{max_terms, rel_tol});
      },
      py::arg("a"), py::arg("b"), py::arg("z"), py::arg("max_terms") = 1000,
      py::arg("rel_tol") = 1e-16);
  m.def("laguerre_kummer_constant", &laguerre_kummer_constant, py::arg("n"));

  m.def("energy", [](int n) { return energy(QuantumNumber(n)); }, py::arg("n"));
  m.def("normalization", [](int n) { return normalization(QuantumNumber(n)); }, py::arg("n"));
  m.def(
      "psi",
      [](int n, const std::vector<double>& x) {
        std::vector<double> out;
        for (double xi : x) out.push_back(psi(QuantumNumber(n), xi));
        return out;
      },
      py::arg("n"), py::arg("x"));
  m.def(
      "phi",
      [](int n, const std::vector<double>& k) {
        std::vector<std::complex<double>> out;
        for (double ki : k) out.push_back(phi(QuantumNumber(n), ki));
        return out;
      },
      py::arg("n"), py::arg("k"));
  m.def(
      "residue_kernel",
      [](int n, double z, bool positive) {
        return residue_kernel(QuantumNumber(n), z, positive ? Side::positive : Side::negative);
      },
      py::arg("n"), py::arg("z"), py::arg("positive") = true);

  m.def(
      "solve_spectrum",
      [](std::optional<double> theta, bool dirichlet, int count, double e_lo, double e_hi,
         double L, double epsilon, double step, double max_step, bool raw) {
        ShootingConfig cfg;
        cfg.e_lo = e_lo;
        cfg.e_hi = e_hi;
        const auto r = solve_spectrum(make_params(theta, dirichlet),
                                      make_grid(L, epsilon, step, max_step, raw), cfg, count);
        py::list levels;
        for (const auto& l : r.levels) levels.append(level_dict(l));
        return levels;
      },
      py::arg("theta") = py::none(), py::arg("dirichlet") = false, py::arg("count") = 4,
      py::arg("e_lo") = -2.0, py::arg("e_hi") = -0.01, py::arg("halfwidth_L") = 320.0,
      py::arg("epsilon") = 1e-4, py::arg("step") = 2.5e-5, py::arg("max_step") = 1.0 / 32.0,
      py::arg("raw_boundary") = false);
  m.def(
      "shoot",
      [](double E, std::optional<double> theta, bool dirichlet) {
        return shoot(E, make_params(theta, dirichlet), GridSpec{}).determinant;
      },
      py::arg("E"), py::arg("theta") = py::none(), py::arg("dirichlet") = false);

  m.def(
      "check_parseval",
      [](int n, int node_count, std::optional<double> halfwidth) {
        QuadratureSpec q;
        q.node_count = node_count;
        q.domain_halfwidth = halfwidth;
        return check_dict(check_parseval(QuantumNumber(n), q));
      },
      py::arg("n"), py::arg("node_count") = 2048, py::arg("halfwidth") = py::none());
  m.def(
      "run_suite",
      [](std::vector<std::string> checks, std::optional<int> n, int n_max, int node_count) {
        SuiteConfig cfg;
        cfg.checks = std::move(checks);
        cfg.n = n;
        cfg.n_max = n_max;
        cfg.quad.node_count = node_count;
        return report_dict(run_suite(cfg));
      },
      py::arg("checks") = std::vector<std::string>{}, py::arg("n") = py::none(),
      py::arg("n_max") = 5, py::arg("node_count") = 2048);
  m.def(
      "probability_current",
      [](const std::vector<double>& x, const std::vector<std::complex<double>>& values) {
        WavefunctionSample s;
        s.abscissae = x;
        s.values = values;
        std::vector<double> j;
        for (const auto& v : probability_current(s).values) j.push_back(v.real());
        return j;
      },
      py::arg("x"), py::arg("values"));
  m.def(
      "semiclassical_time_ratio",
      [](int n, double delta) { return semiclassical_time_ratio(QuantumNumber(n), delta); },
      py::arg("n"), py::arg("delta"));
}
