#include "hydrogen1d/verification.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <limits>
#include <numbers>

namespace hydrogen1d {

using cplx = std::complex<double>;

void QuadratureSpec::validate() const {
  if (domain_halfwidth && !(*domain_halfwidth > 0.0))
    throw std::invalid_argument("QuadratureSpec: domain_halfwidth must be > 0");
  if (node_count < 16) throw std::invalid_argument("QuadratureSpec: node_count must be >= 16");
}

double QuadratureSpec::halfwidth_for(int n, const PhysicalScales& scales) const {
  return domain_halfwidth ? *domain_halfwidth : 40.0 * n * scales.bohr_radius;
}

std::string to_string(QuadratureScheme s) {
  return s == QuadratureScheme::gauss_legendre_composite ? "gauss-legendre-composite"
                                                         : "trapezoid-refined";
}

QuadratureScheme scheme_from_string(const std::string& s) {
  if (s == "gauss-legendre-composite") return QuadratureScheme::gauss_legendre_composite;
  if (s == "trapezoid-refined") return QuadratureScheme::trapezoid_refined;
  throw std::invalid_argument("unknown quadrature scheme: " + s);
}

CheckResult CheckResult::make(std::string name, double measured, double tolerance,
                              std::string detail) {
  CheckResult c;
  c.name = std::move(name);
  c.measured = measured;
  c.tolerance = tolerance;
  c.passed = measured <= tolerance;  // false for NaN
  c.detail = std::move(detail);
  return c;
}

CheckResult CheckResult::at_least(std::string name, double observed, double threshold,
                                  std::string detail) {
  const double ratio = observed > 0.0 ? threshold / observed
                                      : std::numeric_limits<double>::infinity();
  if (!detail.empty()) detail += "; ";
  detail += fmt::format("observed {:.6g}, required >= {:.6g}", observed, threshold);
  return make(std::move(name), ratio, 1.0, std::move(detail));
}

void VerificationReport::add(CheckResult c) {
  all_passed = all_passed && c.passed;
  checks.push_back(std::move(c));
}

void VerificationReport::merge(const VerificationReport& other) {
  for (const auto& c : other.checks) add(c);
}

void VerificationReport::finalize() {
  std::stable_sort(checks.begin(), checks.end(),
                   [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  all_passed = std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

namespace {

// Integrates over [-L, 0] and [0, L] separately; the integrands of interest
// have a derivative kink at the origin.
template <class F>
auto integrate_split(F&& f, double L, const QuadratureSpec& quad) {
  const int half = quad.node_count / 2;
  return integrate(f, -L, 0.0, half, quad.scheme) + integrate(f, 0.0, L, half, quad.scheme);
}

std::string fmt_n(const char* family, int n) { return fmt::format("{}[n={}]", family, n); }

}  // namespace

CheckResult check_parseval(QuantumNumber n, const QuadratureSpec& quad,
                           const PhysicalScales& scales, double tolerance) {
  quad.validate();
  const double L = quad.halfwidth_for(n.value(), scales);
  const auto dens_x = [&](double x) { return std::norm(psi(n, x, scales)); };
  const double x_norm = integrate_split(dens_x, L, quad);

  // k = tan(t) / (n a0) maps the real line onto (-pi/2, pi/2); the
  // transformed integrand is a trigonometric polynomial.
  const double na0 = n.value() * scales.bohr_radius;
  const auto dens_t = [&](double t) {
    const double c = std::cos(t);
    return std::norm(phi(n, std::tan(t) / na0, scales)) / (na0 * c * c);
  };
  const double h = 0.5 * std::numbers::pi;
  const int half = quad.node_count / 2;
  const double k_norm =
      integrate(dens_t, -h, 0.0, half, quad.scheme) + integrate(dens_t, 0.0, h, half, quad.scheme);

  const double measured = std::abs(k_norm - x_norm);
  std::string detail = fmt::format(
      "x-norm={:.12g} k-norm={:.12g}; dk measure with k=tan(t)/(n a0); halfwidth={:.6g}, nodes={}",
      x_norm, k_norm, L, quad.node_count);
  const double tail = std::norm(psi(n, L, scales)) * na0;
  if (tail > 0.1 * tolerance) detail += fmt::format("; domain truncation, tail mass ~{:.3g}", tail);
  const double coarse = [&] {
    QuadratureSpec q = quad;
    q.node_count = std::max(4, quad.node_count / 2);
    return integrate(dens_x, -L, 0.0, q.node_count / 2, q.scheme) +
           integrate(dens_x, 0.0, L, q.node_count / 2, q.scheme);
  }();
  if (std::abs(coarse - x_norm) > tolerance)
    detail += fmt::format("; x quadrature unresolved (half-node estimate differs by {:.3g})",
                          std::abs(coarse - x_norm));
  return CheckResult::make(fmt_n("parseval", n.value()), measured, tolerance, detail);
}

VerificationReport check_orthonormality(int n_max, const QuadratureSpec& quad,
                                        const PhysicalScales& scales, double tolerance) {
  if (n_max < 2) throw std::invalid_argument("check_orthonormality: n_max must be >= 2");
  quad.validate();
  const double L = quad.halfwidth_for(n_max, scales);
  double max_dev = 0.0, max_diag = 0.0;
  int worst_m = 1, worst_n = 1;
  for (int m = 1; m <= n_max; ++m) {
    for (int k = m; k <= n_max; ++k) {
      const QuantumNumber qm(m), qk(k);
      const double g = integrate_split(
          [&](double x) { return psi(qm, x, scales) * psi(qk, x, scales); }, L, quad);
      const double dev = std::abs(g - (m == k ? 1.0 : 0.0));
      if (dev > max_dev) {
        max_dev = dev;
        worst_m = m;
        worst_n = k;
      }
      if (m == k) max_diag = std::max(max_diag, dev);
    }
  }
  VerificationReport r;
  r.add(CheckResult::make(
      fmt::format("orthonormality[n_max={}]", n_max), max_dev, tolerance,
      fmt::format("max |G - I| at ({}, {}); halfwidth={:.6g}, nodes={}", worst_m, worst_n, L,
                  quad.node_count)));
  r.add(CheckResult::make(fmt::format("orthonormality.diagonal[n_max={}]", n_max), max_diag,
                          std::max(tolerance, 1e-10), "max |G_nn - 1|"));
  return r;
}

std::vector<cplx> fourier_transform_psi(QuantumNumber n, const std::vector<double>& k_grid,
                                        const QuadratureSpec& quad, const PhysicalScales& scales) {
  quad.validate();
  const double L = quad.halfwidth_for(n.value(), scales);
  double k_max = 0.0;
  for (double k : k_grid) k_max = std::max(k_max, std::abs(k));
  // Keep at least one panel per half wavelength of e^{-ikx}.
  const int min_panels = k_max > 0.0 ? static_cast<int>(std::ceil(L * k_max / std::numbers::pi)) : 1;
  const int per_half = std::max(quad.node_count / 2, 64 * min_panels);
  const auto layout = panel_layout(per_half);
  const auto& rule = gauss_legendre(layout.nodes_per_panel);

  std::vector<double> xs, ws;
  for (double sign : {-1.0, 1.0}) {
    const double width = L / layout.panels;
    for (int p = 0; p < layout.panels; ++p) {
      const double mid = (p + 0.5) * width;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        xs.push_back(sign * (mid + 0.5 * width * rule.nodes[i]));
        ws.push_back(0.5 * width * rule.weights[i]);
      }
    }
  }
  std::vector<double> fx(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) fx[i] = psi(n, xs[i], scales);

  const double pref = 1.0 / std::sqrt(2.0 * std::numbers::pi);
  std::vector<cplx> out;
  out.reserve(k_grid.size());
  for (double k : k_grid) {
    cplx s{0.0, 0.0};
    for (std::size_t i = 0; i < xs.size(); ++i) s += ws[i] * fx[i] * std::polar(1.0, -k * xs[i]);
    out.push_back(pref * s);
  }
  return out;
}

CheckResult check_fourier_consistency(QuantumNumber n, const std::vector<double>& k_grid,
                                      const QuadratureSpec& quad, const PhysicalScales& scales,
                                      double tolerance) {
  if (k_grid.empty()) throw std::invalid_argument("check_fourier_consistency: empty k grid");
  const auto num = fourier_transform_psi(n, k_grid, quad, scales);
  std::vector<cplx> ref;
  ref.reserve(k_grid.size());
  for (double k : k_grid) ref.push_back(phi(n, k, scales));

  cplx overlap{0.0, 0.0};
  for (std::size_t i = 0; i < ref.size(); ++i) overlap += std::conj(num[i]) * ref[i];
  const cplx phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : cplx{1.0, 0.0};
  double err = 0.0;
  for (std::size_t i = 0; i < ref.size(); ++i) err = std::max(err, std::abs(phase * num[i] - ref[i]));
  return CheckResult::make(
      fmt_n("fourier", n.value()), err, tolerance,
      fmt::format("max |e^(i a) F[psi] - phi| over {} k points, phase a={:.6g} rad", k_grid.size(),
                  std::arg(phase)));
}

CheckResult check_schrodinger_residual(QuantumNumber n, const std::vector<double>& x_grid,
                                       const PhysicalScales& scales, double tolerance) {
  const double E = energy(n, scales);
  const double kinetic = scales.hbar * scales.hbar / (2.0 * scales.mass);
  // Rounding in the Laguerre factors leaves an absolute error proportional to
  // the individual terms; it dominates only next to nodes of psi.
  constexpr double kFloor = 1e-6;
  double worst = 0.0, worst_x = 0.0;
  for (double x : x_grid) {
    if (x == 0.0) throw std::invalid_argument("check_schrodinger_residual: grid must exclude 0");
    const double p = psi(n, x, scales);
    const double t1 = kinetic * psi_second_derivative(n, x, scales);
    const double t2 = scales.charge_sq / std::abs(x) * p;
    const double t3 = E * p;
    const double mag = std::abs(t1) + std::abs(t2) + std::abs(t3);
    if (mag == 0.0) continue;  // underflowed tail
    const double rel = std::abs(t1 + t2 + t3) / (std::abs(t3) + kFloor * mag);
    if (!(rel <= worst)) {
      worst = rel;
      worst_x = x;
    }
  }
  return CheckResult::make(fmt_n("schrodinger", n.value()), worst, tolerance,
                           fmt::format("worst at x={:.6g}; {} points", worst_x, x_grid.size()));
}

// ---- matching ----------------------------------------------------------------

TrialFunction eigenstate_trial(QuantumNumber n) {
  const double dxdz = 0.5 * n.value();
  return {fmt::format("psi{}", n.value()), [n, dxdz](double z) { return psi(n, z * dxdz); },
          [n, dxdz](double z) { return psi_derivative(n, z * dxdz) * dxdz; }};
}

TrialFunction half_line_trial(QuantumNumber n, Side side) {
  const double dxdz = 0.5 * n.value();
  return {fmt::format("half_line{}{}", n.value(), side == Side::positive ? "+" : "-"),
          [n, side, dxdz](double z) { return half_line_solution(n, side, z * dxdz).real(); },
          [n, side, dxdz](double z) {
            const Side from = z > 0.0 ? Side::positive : Side::negative;
            return half_line_derivative(n, side, z * dxdz, from) * dxdz;
          }};
}

TrialFunction even_kink_trial() {
  return {"even_kink", [](double z) { return std::exp(-0.5 * std::abs(z)); },
          [](double z) { return (z > 0.0 ? -0.5 : 0.5) * std::exp(-0.5 * std::abs(z)); }};
}

double matching_residual(const TrialFunction& f, int alpha, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("matching_residual: eps must be > 0");
  const auto& rule = gauss_legendre(64);
  double right = 0.0, left = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double z = 0.5 * eps * (rule.nodes[i] + 1.0);
    right += rule.weights[i] * f.value(z) / z;
    left += rule.weights[i] * f.value(-z) / (-z);
  }
  right *= 0.5 * eps;
  left *= 0.5 * eps;
  return std::abs(f.derivative(eps) - f.derivative(-eps) + alpha * (right - left));
}

std::optional<double> fitted_order(const std::vector<double>& eps, const std::vector<double>& r) {
  constexpr double kFloor = 1e-14;
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < eps.size() && i < r.size(); ++i) {
    if (r[i] > kFloor) {
      lx.push_back(std::log(eps[i]));
      ly.push_back(std::log(r[i]));
    }
  }
  if (lx.size() < 2) return std::nullopt;
  const double m = static_cast<double>(lx.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sx += lx[i];
    sy += ly[i];
    sxx += lx[i] * lx[i];
    sxy += lx[i] * ly[i];
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

VerificationReport check_matching(const TrialFunction& f, int alpha,
                                  const std::vector<double>& epsilons, double C) {
  if (epsilons.empty()) throw std::invalid_argument("check_matching: no epsilons");
  for (std::size_t i = 0; i < epsilons.size(); ++i) {
    if (!(epsilons[i] > 0.0)) throw std::invalid_argument("check_matching: epsilons must be > 0");
    if (i > 0 && !(epsilons[i] < epsilons[i - 1]))
      throw std::invalid_argument("check_matching: epsilons must be decreasing");
  }
  VerificationReport rep;
  std::vector<double> res;
  for (double e : epsilons) {
    const double r = matching_residual(f, alpha, e);
    res.push_back(r);
    rep.add(CheckResult::make(fmt::format("matching[{}].eps={:.3g}", f.name, e),
                              std::isfinite(r) ? r : std::numeric_limits<double>::infinity(),
                              C * e, std::isfinite(r) ? "" : "f/z not finite on the grid"));
  }
  constexpr double kFloor = 1e-14;
  bool monotone = true;
  for (std::size_t i = 1; i < res.size(); ++i)
    if (!(res[i] <= res[i - 1] + kFloor)) monotone = false;
  const auto order = fitted_order(epsilons, res);
  double measured;
  std::string detail;
  if (!monotone) {
    measured = std::numeric_limits<double>::infinity();
    detail = "residual does not decrease with eps";
  } else if (!order) {
    measured = 0.0;
    detail = "residual below 1e-14 for every eps";
  } else {
    measured = *order > 0.0 ? 1.0 / *order : std::numeric_limits<double>::infinity();
    detail = fmt::format("fitted order {:.4g}, required >= 1", *order);
  }
  rep.add(CheckResult::make(fmt::format("matching[{}].decay", f.name), measured, 1.0, detail));
  return rep;
}

VerificationReport check_matching(QuantumNumber n, const std::vector<double>& epsilons, double C) {
  return check_matching(eigenstate_trial(n), n.value(), epsilons, C);
}

// ---- ground-state candidate -----------------------------------------------------

double GroundStateCandidate::amplitude() const {
  if (!(ell > 0.0)) throw std::invalid_argument("GroundStateCandidate: ell must be > 0");
  return c ? *c : 1.0 / std::sqrt(ell);
}

VerificationReport groundstate_rejection(const std::vector<double>& E_grid,
                                         const std::vector<double>& x_grid,
                                         const GroundStateCandidate& cand) {
  if (E_grid.empty() || x_grid.empty())
    throw std::invalid_argument("groundstate_rejection: empty grid");
  for (double x : x_grid)
    if (x == 0.0) throw std::invalid_argument("groundstate_rejection: x grid must exclude 0");
  for (double E : E_grid)
    if (!std::isfinite(E)) throw std::invalid_argument("groundstate_rejection: E must be finite");
  const double c = cand.amplitude();
  const double ell = cand.ell;
  const auto f = [c, ell](double x) { return c * std::exp(-std::abs(x) / ell); };

  // psi'' by 4th-order central differences; each x is at least h from 0.
  std::vector<double> val(x_grid.size()), d2(x_grid.size());
  for (std::size_t i = 0; i < x_grid.size(); ++i) {
    const double x = x_grid[i];
    const double h = std::min(1e-3 * ell, 0.25 * std::abs(x));
    val[i] = f(x);
    d2[i] = (-f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) + 16 * f(x - h) - f(x - 2 * h)) / (12 * h * h);
  }
  double best = std::numeric_limits<double>::infinity(), best_E = E_grid.front();
  for (double E : E_grid) {
    double sup = 0.0;
    for (std::size_t i = 0; i < x_grid.size(); ++i)
      sup = std::max(sup, std::abs(-0.5 * d2[i] - val[i] / std::abs(x_grid[i]) - E * val[i]));
    if (sup < best) {
      best = sup;
      best_E = E;
    }
  }
  VerificationReport rep;
  rep.add(CheckResult::at_least(
      "groundstate.residual", best, 0.1,
      fmt::format("min over {} energies of the sup-norm residual, attained at E={:.6g}",
                  E_grid.size(), best_E)));

  const double h = 1e-6 * ell;
  const BoundaryPair right{f(0.0), (-3 * f(0.0) + 4 * f(h) - f(2 * h)) / (2 * h)};
  const BoundaryPair left{f(0.0), (3 * f(0.0) - 4 * f(-h) + f(-2 * h)) / (2 * h)};
  const auto res = interface_residual(ExtensionParams::rotation(0.0), left, right);
  rep.add(CheckResult::at_least("groundstate.derivative_jump", std::abs(res[1]), 1e-8,
                                fmt::format("expected 2c/ell = {:.6g}", 2 * c / ell)));

  std::vector<double> xs;
  for (double x : x_grid) xs.push_back(x);
  auto sanity = check_schrodinger_residual(QuantumNumber(1), xs);
  sanity.name = "groundstate.eigenstate_sanity[n=1]";
  rep.add(sanity);
  return rep;
}

CheckResult check_no_deep_state(const GridSpec& grid, double e_lo, double e_hi) {
  ShootingConfig cfg;
  cfg.e_lo = e_lo;
  cfg.e_hi = e_hi;
  const auto r = scan_spectrum(ExtensionParams::rotation(0.0), grid, cfg);
  const double zeros = static_cast<double>(r.levels.size() + r.rejected.size());
  return CheckResult::make("groundstate.no_deep_state", zeros, 0.0,
                           fmt::format("determinant zeros in [{:.6g}, {:.6g})", e_lo, e_hi));
}

// ---- semiclassical ---------------------------------------------------------------

double turning_point(QuantumNumber n, const PhysicalScales& scales) {
  return scales.charge_sq / std::abs(energy(n, scales));
}

namespace {

// int_a^b dx / v(x), v = sqrt((2/m)(e^2/x - |E|)), 0 <= a < b < x_t.
double transit_time(double a, double b, double absE, const PhysicalScales& s) {
  const auto& rule = gauss_legendre(64);
  const double pref = std::sqrt(0.5 * s.mass);
  double sum = 0.0;
  if (a == 0.0) {
    // x = u^2 removes the inverse square-root singularity of 1/v at 0.
    const double ub = std::sqrt(b);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double u = 0.5 * ub * (rule.nodes[i] + 1.0);
      sum += rule.weights[i] * 2.0 * u * u / std::sqrt(s.charge_sq - absE * u * u);
    }
    return pref * 0.5 * ub * sum;
  }
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double x = a + 0.5 * (b - a) * (rule.nodes[i] + 1.0);
    sum += rule.weights[i] / std::sqrt(s.charge_sq / x - absE);
  }
  return pref * 0.5 * (b - a) * sum;
}

}  // namespace

double semiclassical_time_ratio(QuantumNumber n, double delta, const PhysicalScales& scales) {
  scales.validate();
  const double xt = turning_point(n, scales);
  if (!(delta > 0.0) || !(delta < xt))
    throw std::invalid_argument(fmt::format(
        "semiclassical_time_ratio: need 0 < delta < turning point {:.6g} (got {:.6g})", xt, delta));
  const double absE = std::abs(energy(n, scales));
  const double t0 = 2.0 * transit_time(0.0, 0.5 * delta, absE, scales);
  const double c = 0.5 * xt;
  const double t_ref = transit_time(c - 0.5 * delta, c + 0.5 * delta, absE, scales);
  return t0 / t_ref;
}

CheckResult check_semiclassical_exponent(QuantumNumber n, const std::vector<double>& deltas,
                                         const PhysicalScales& scales, double expected,
                                         double tolerance) {
  std::vector<double> ratios;
  bool monotone = true;
  for (double d : deltas) {
    ratios.push_back(semiclassical_time_ratio(n, d, scales));
    if (ratios.size() > 1 && (ratios.back() - ratios[ratios.size() - 2]) * (d - deltas[ratios.size() - 2]) <= 0.0)
      monotone = false;
  }
  const auto p = fitted_order(deltas, ratios);
  const double measured = p ? std::abs(*p - expected) : std::numeric_limits<double>::infinity();
  return CheckResult::make(
      fmt_n("semiclassical.exponent", n.value()), monotone ? measured : std::numeric_limits<double>::infinity(),
      tolerance,
      fmt::format("fitted exponent {:.6g} over {} deltas; ratio at smallest delta {:.3g}{}",
                  p.value_or(std::nan("")), deltas.size(), ratios.empty() ? 0.0 : ratios.front(),
                  monotone ? "" : "; ratio not monotone in delta"));
}

// ---- probability current -------------------------------------------------------------

WavefunctionSample probability_current(const WavefunctionSample& s, const PhysicalScales& scales) {
  s.validate();
  if (s.space != Space::coordinate)
    throw std::invalid_argument("probability_current: coordinate-space sample required");
  const std::size_t n = s.size();
  if (n < 3) throw std::invalid_argument("probability_current: need at least 3 grid points");
  const double h = (s.abscissae.back() - s.abscissae.front()) / static_cast<double>(n - 1);
  for (std::size_t i = 1; i < n; ++i)
    if (std::abs(s.abscissae[i] - s.abscissae[i - 1] - h) > 1e-6 * h)
      throw std::invalid_argument("probability_current: grid must be uniform");
  const auto& f = s.values;
  std::vector<cplx> d(n);
  d[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h);
  d[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * h);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (i >= 2 && i + 2 < n)
      d[i] = (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]) / (12.0 * h);
    else
      d[i] = (f[i + 1] - f[i - 1]) / (2.0 * h);
  }
  WavefunctionSample j;
  j.space = Space::coordinate;
  j.abscissae = s.abscissae;
  j.values.resize(n);
  const double pref = scales.hbar / scales.mass;
  for (std::size_t i = 0; i < n; ++i) j.values[i] = pref * (std::conj(f[i]) * d[i]).imag();
  return j;
}

WavefunctionSample superposition_sample(QuantumNumber a, QuantumNumber b,
                                        const std::vector<double>& x, const PhysicalScales& scales) {
  WavefunctionSample s;
  s.space = Space::coordinate;
  s.abscissae = x;
  for (double xi : x)
    s.values.push_back(cplx{psi(a, xi, scales), psi(b, xi, scales)} / std::numbers::sqrt2);
  s.validate();
  return s;
}

namespace {

// Lagrange extrapolation through k points to x = 0.
double extrapolate_to_zero(const double* x, const double* f, int k) {
  double sum = 0.0;
  for (int i = 0; i < k; ++i) {
    double l = 1.0;
    for (int m = 0; m < k; ++m)
      if (m != i) l *= x[m] / (x[m] - x[i]);
    sum += f[i] * l;
  }
  return sum;
}

}  // namespace

std::pair<double, double> current_limits_at_origin(const WavefunctionSample& j) {
  const auto& x = j.abscissae;
  const auto p = static_cast<std::size_t>(std::upper_bound(x.begin(), x.end(), 0.0) - x.begin());
  if (p < 8 || x.size() - p < 8 || x[p - 1] == 0.0)
    throw std::invalid_argument("current_limits_at_origin: need >= 8 points on each side, none at 0");
  // Skip the stencils that straddle the origin.
  double xr[4], fr[4], xl[4], fl[4];
  for (int i = 0; i < 4; ++i) {
    xr[i] = x[p + 3 + i];
    fr[i] = j.values[p + 3 + i].real();
    xl[i] = x[p - 4 - i];
    fl[i] = j.values[p - 4 - i].real();
  }
  return {extrapolate_to_zero(xl, fl, 4), extrapolate_to_zero(xr, fr, 4)};
}

std::vector<double> symmetric_grid(double halfwidth, double h) {
  if (!(h > 0.0 && halfwidth > h)) throw std::invalid_argument("symmetric_grid: need 0 < h < halfwidth");
  std::vector<double> pos;
  for (int i = 0;; ++i) {
    const double x = (i + 0.5) * h;
    if (x > halfwidth) break;
    pos.push_back(x);
  }
  return mirror_grid(pos);
}

VerificationReport check_current(int n_max, const PhysicalScales& scales) {
  if (n_max < 2) throw std::invalid_argument("check_current: n_max must be >= 2");
  const double a0 = scales.bohr_radius;
  const auto x = symmetric_grid(20.0 * n_max * a0, 1e-3 * a0);
  VerificationReport rep;
  for (int n = 1; n <= n_max; ++n) {
    const auto j = probability_current(sample_psi(QuantumNumber(n), x, scales), scales);
    double jmax = 0.0;
    for (const auto& v : j.values) jmax = std::max(jmax, std::abs(v));
    rep.add(CheckResult::make(fmt_n("current.real", n), jmax, 1e-12, "max |j| for a real eigenstate"));
  }
  for (int n = 1; n < n_max; ++n) {
    const auto j = probability_current(superposition_sample(QuantumNumber(n), QuantumNumber(n + 1), x, scales), scales);
    const auto [jl, jr] = current_limits_at_origin(j);
    rep.add(CheckResult::make(fmt::format("current.continuity[{}+{}i]", n, n + 1), std::abs(jr - jl), 1e-8,
                              fmt::format("j(0-)={:.3g} j(0+)={:.3g}", jl, jr)));
  }
  return rep;
}

// ---- boundary form -----------------------------------------------------------------------

namespace {

WavefunctionSample sample_fn(const std::vector<double>& x, const std::function<double(double)>& f) {
  WavefunctionSample s;
  s.abscissae = x;
  for (double xi : x) s.values.emplace_back(f(xi), 0.0);
  return s;
}

double kink(double x) { return std::exp(-std::abs(x)); }

}  // namespace

double kink_defect_against_ground(double h, double halfwidth) {
  const auto x = symmetric_grid(halfwidth, h);
  return boundary_defect(sample_fn(x, kink), sample_psi(QuantumNumber(1), x),
                         ExtensionParams::rotation(0.0));
}

VerificationReport check_boundary_defect(double h, double halfwidth) {
  const auto x = symmetric_grid(halfwidth, h);
  const auto theta0 = ExtensionParams::rotation(0.0);
  VerificationReport rep;
  for (int n = 1; n <= 2; ++n) {
    const double d = boundary_defect(sample_psi(QuantumNumber(n), x),
                                     sample_psi(QuantumNumber(n + 1), x), theta0);
    rep.add(CheckResult::make(fmt::format("boundary_defect.eigenstates[{},{}]", n, n + 1), d, 1e-8));
  }
  const auto bump = [](double t) {
    const double a = std::abs(t);
    return a > 1.0 ? std::exp(-1.0 / (a - 1.0) - t * t) : 0.0;
  };
  rep.add(CheckResult::make("boundary_defect.vanishing_near_origin",
                            boundary_defect(sample_fn(x, bump), sample_fn(x, [&](double t) { return t * bump(t); }), theta0),
                            1e-8));
  const auto gauss = [](double t) { return std::exp(-t * t); };
  rep.add(CheckResult::at_least("boundary_defect.kink_vs_gaussian",
                                boundary_defect(sample_fn(x, kink), sample_fn(x, gauss), theta0), 1e-2,
                                "expected 2"));
  const auto half = [](double t) { return half_line_solution(QuantumNumber(1), Side::positive, t).real(); };
  rep.add(CheckResult::at_least("boundary_defect.kink_vs_half_line",
                                boundary_defect(sample_fn(x, kink), sample_fn(x, half), theta0), 1e-2,
                                "expected 2"));
  return rep;
}

}  // namespace hydrogen1d
