#include "hydrogen1d/suite.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <functional>
#include <future>
#include <map>

namespace hydrogen1d {

const std::vector<std::string>& suite_families() {
  static const std::vector<std::string> names{
      "boundary_defect", "current", "fourier", "groundstate", "matching",
      "orthonormality", "parseval", "schrodinger", "semiclassical"};
  return names;
}

void SuiteConfig::validate() const {
  for (const auto& c : checks)
    if (std::find(suite_families().begin(), suite_families().end(), c) == suite_families().end())
      throw std::invalid_argument(fmt::format("unknown check '{}'", c));
  if (n) QuantumNumber{*n};
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  quad.validate();
  grid.validate();
}

std::vector<double> logspace(double lo, double hi, int points) {
  auto e = linspace(std::log10(lo), std::log10(hi), points);
  for (auto& v : e) v = std::pow(10.0, v);
  e.front() = lo;
  e.back() = hi;
  return e;
}

std::vector<double> default_k_grid(const PhysicalScales& scales) {
  auto k = linspace(-10.0, 10.0, 201);
  for (auto& v : k) v /= scales.bohr_radius;
  return k;
}

std::vector<double> default_residual_grid(int n, int per_side, const PhysicalScales& scales) {
  const double a0 = scales.bohr_radius;
  const auto pos = logspace(1e-3 * a0, 40.0 * n * a0, per_side);
  std::vector<double> out;
  for (auto it = pos.rbegin(); it != pos.rend(); ++it) out.push_back(-*it);
  out.insert(out.end(), pos.begin(), pos.end());
  return out;
}

std::vector<double> default_epsilons() { return {1e-1, 1e-2, 1e-3, 1e-4, 1e-5}; }

std::vector<double> default_deltas(const PhysicalScales& scales) {
  auto d = logspace(1e-4, 1e-1, 13);
  for (auto& v : d) v *= scales.bohr_radius;
  return d;
}

namespace {

VerificationReport run_family(const std::string& family, const SuiteConfig& cfg) {
  std::vector<int> ns;
  if (cfg.n)
    ns = {*cfg.n};
  else
    for (int n = 1; n <= cfg.n_max; ++n) ns.push_back(n);
  const int top = cfg.n.value_or(cfg.n_max);

  VerificationReport rep;
  if (family == "parseval") {
    for (int n : ns) rep.add(check_parseval(QuantumNumber(n), cfg.quad));
  } else if (family == "orthonormality") {
    rep.merge(check_orthonormality(std::max(2, top), cfg.quad));
  } else if (family == "fourier") {
    const auto k = default_k_grid();
    for (int n : ns) rep.add(check_fourier_consistency(QuantumNumber(n), k, cfg.quad));
  } else if (family == "schrodinger") {
    for (int n : ns) rep.add(check_schrodinger_residual(QuantumNumber(n), default_residual_grid(n)));
  } else if (family == "matching") {
    const auto eps = default_epsilons();
    for (int n : ns) {
      rep.merge(check_matching(QuantumNumber(n), eps));
      // The confined states must violate the condition.
      const auto half = half_line_trial(QuantumNumber(n), Side::positive);
      rep.add(CheckResult::at_least(fmt::format("matching.half_line_rejected[n={}]", n),
                                    matching_residual(half, n, eps.back()), 1e-2,
                                    fmt::format("residual at eps={:.3g}", eps.back())));
    }
    rep.add(CheckResult::at_least("matching.even_kink_rejected",
                                  matching_residual(even_kink_trial(), 1, eps.back()), 0.5,
                                  "derivative jump of e^{-|z|/2} is 1"));
  } else if (family == "groundstate") {
    rep.merge(groundstate_rejection(linspace(-50.0, 10.0, 6001), linspace(0.1, 10.0, 991)));
    rep.add(check_no_deep_state(cfg.grid));
  } else if (family == "current") {
    rep.merge(check_current(std::max(2, top)));
  } else if (family == "semiclassical") {
    const auto d = default_deltas();
    for (int n : ns) rep.add(check_semiclassical_exponent(QuantumNumber(n), d));
  } else if (family == "boundary_defect") {
    rep.merge(check_boundary_defect());
  }
  return rep;
}

}  // namespace

VerificationReport run_suite(const SuiteConfig& cfg) {
  cfg.validate();
  const auto& families = cfg.checks.empty() ? suite_families() : cfg.checks;
  VerificationReport report;
  if (cfg.parallel) {
    std::vector<std::future<VerificationReport>> jobs;
    for (const auto& f : families)
      jobs.push_back(std::async(std::launch::async, run_family, f, std::cref(cfg)));
    for (auto& j : jobs) report.merge(j.get());
  } else {
    for (const auto& f : families) report.merge(run_family(f, cfg));
  }
  report.finalize();
  return report;
}

}  // namespace hydrogen1d
