#include "hydrogen1d/extension_solver.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <numbers>

namespace hydrogen1d {

ExtensionParams ExtensionParams::rotation(double theta) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double t = std::fmod(theta, two_pi);
  if (t < 0.0) t += two_pi;
  return {Variant::rotation, t};
}

void ExtensionParams::validate() const {
  if (variant == Variant::rotation && !(theta >= 0.0 && theta < 2.0 * std::numbers::pi))
    throw std::invalid_argument("ExtensionParams: theta must lie in [0, 2 pi)");
}

std::string ExtensionParams::label() const {
  if (variant == Variant::dirichlet) return "dirichlet";
  return fmt::format("rotation(theta={:.12g})", theta);
}

void GridSpec::validate() const {
  if (!(epsilon > 0.0 && epsilon < halfwidth_L))
    throw std::invalid_argument("GridSpec: need 0 < epsilon < halfwidth_L");
  if (!(step > 0.0 && step <= 0.25 * epsilon))
    throw std::invalid_argument("GridSpec: need 0 < step <= epsilon / 4");
  if (!(max_step >= step))
    throw std::invalid_argument("GridSpec: max_step must be >= step");
}

void ShootingConfig::validate() const {
  if (!(e_lo < e_hi && e_hi < 0.0))
    throw std::invalid_argument("ShootingConfig: need e_lo < e_hi < 0 (bound states only)");
  if (!(bisection_tol > 0.0)) throw std::invalid_argument("ShootingConfig: bisection_tol > 0");
  if (max_iter < 1) throw std::invalid_argument("ShootingConfig: max_iter >= 1");
  if (points_per_decade < 1) throw std::invalid_argument("ShootingConfig: points_per_decade >= 1");
  if (!(degeneracy_tol > 0.0)) throw std::invalid_argument("ShootingConfig: degeneracy_tol > 0");
  if (!(regularity_tol > 0.0)) throw std::invalid_argument("ShootingConfig: regularity_tol > 0");
}

std::array<double, 2> interface_residual(const ExtensionParams& params, BoundaryPair left,
                                         BoundaryPair right) {
  if (params.variant == ExtensionParams::Variant::dirichlet) return {left.value, right.value};
  const double c = std::cos(params.theta);
  const double s = std::sin(params.theta);
  return {left.value - (c * right.value - s * right.derivative),
          left.derivative - (s * right.value + c * right.derivative)};
}

std::vector<double> solver_abscissae(const GridSpec& grid) {
  grid.validate();
  constexpr double growth = 1.0 / 64.0;
  std::vector<double> xs{grid.epsilon};
  double x = grid.epsilon;
  while (x < grid.halfwidth_L) {
    const double h = std::min(grid.max_step, std::max(grid.step, growth * x));
    x += h;
    if (x > grid.halfwidth_L - 1e-3 * h) x = grid.halfwidth_L;
    xs.push_back(x);
  }
  return xs;
}

std::vector<double> mirror_grid(const std::vector<double>& positive) {
  std::vector<double> out;
  out.reserve(2 * positive.size());
  for (auto it = positive.rbegin(); it != positive.rend(); ++it) out.push_back(-*it);
  out.insert(out.end(), positive.begin(), positive.end());
  return out;
}

namespace {

struct Trajectory {
  // Values at solver_abscissae, scaled so that the pair at epsilon has unit norm.
  std::vector<double> value;
  BoundaryPair inner;
  /// max |u| over the half-line, same scaling.
  double peak;
};

// Decaying solution of u'' = -2 (E + 1/x) u on [eps, L], integrated inward
// from u(L) = 1, u'(L) = -kappa u(L) with classical RK4.
Trajectory integrate_inward(double E, const std::vector<double>& xs, bool keep_values) {
  const double kappa = std::sqrt(-2.0 * E);
  const auto g = [E](double x) { return -2.0 * (E + 1.0 / x); };
  const std::size_t n = xs.size();

  std::vector<double> value;
  std::vector<double> log_scale;
  if (keep_values) {
    value.resize(n);
    log_scale.resize(n);
  }
  double y = 1.0;
  double v = -kappa;
  double acc = 0.0;
  double peak_log = 0.0;
  if (keep_values) {
    value[n - 1] = y;
    log_scale[n - 1] = acc;
  }
  for (std::size_t i = n - 1; i > 0; --i) {
    const double x0 = xs[i];
    const double h = xs[i - 1] - x0;  // negative: inward
    const double xm = x0 + 0.5 * h;
    const double x1 = xs[i - 1];
    const double k1y = v, k1v = g(x0) * y;
    const double k2y = v + 0.5 * h * k1v, k2v = g(xm) * (y + 0.5 * h * k1y);
    const double k3y = v + 0.5 * h * k2v, k3v = g(xm) * (y + 0.5 * h * k2y);
    const double k4y = v + h * k3v, k4v = g(x1) * (y + h * k3y);
    y += h / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
    v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    const double mag = std::abs(y) + std::abs(v);
    if (!std::isfinite(mag))
      throw IntegrationError(fmt::format("shoot: non-finite solution at x={}, E={}", x1, E));
    if (y != 0.0) peak_log = std::max(peak_log, std::log(std::abs(y)) + acc);
    if (mag > 1e100) {
      y /= mag;
      v /= mag;
      acc += std::log(mag);
    }
    if (keep_values) {
      value[i - 1] = y;
      log_scale[i - 1] = acc;
    }
  }
  const double norm = std::hypot(y, v);
  if (!(norm > 0.0)) throw IntegrationError(fmt::format("shoot: vanishing solution at E={}", E));
  Trajectory t;
  t.inner = {y / norm, v / norm};
  t.peak = std::exp(peak_log - acc) / norm;
  if (keep_values) {
    t.value.resize(n);
    for (std::size_t i = 0; i < n; ++i)
      t.value[i] = value[i] * std::exp(log_scale[i] - acc) / norm;
  }
  return t;
}

struct FrobeniusBasis {
  double y1, dy1, y2, dy2;
};

// Regular and irregular local solutions of u'' = -2 (E + 1/x) u at x > 0:
//   y1 = sum c_k x^{k+1},             c_0 = 1,
//   y2 = -2 y1 ln x + sum d_k x^k,    d_0 = 1, d_1 = 0.
FrobeniusBasis frobenius_basis(double E, double x) {
  constexpr int kMaxTerms = 200;
  double c_prev2 = 0.0, c_prev = 1.0;  // c_{m-2}, c_{m-1}
  double d_prev = 1.0, d_curr = 0.0;   // d_{m-1}, d_m with m = 1
  double s1 = x, ds1 = 1.0;            // y1 and y1'
  double g = 1.0, dg = 0.0;            // sum d_k x^k and derivative
  double xp = x;                       // x^m
  // c_m from (m+1) m c_m = -2 c_{m-1} - 2 E c_{m-2}; d_{m+1} from
  // (m+1) m d_{m+1} = (4m+2) c_m - 2 d_m - 2 E d_{m-1}.
  for (int m = 1; m < kMaxTerms; ++m) {
    const double c_m = -2.0 * (c_prev + E * c_prev2) / (m * (m + 1.0));
    const double d_next = ((4.0 * m + 2.0) * c_m - 2.0 * d_curr - 2.0 * E * d_prev) / (m * (m + 1.0));
    // y1 term c_m x^{m+1}; g terms d_m x^m (d_1 = 0) and d_{m+1} x^{m+1}.
    const double t1 = c_m * xp * x;
    s1 += t1;
    ds1 += (m + 1.0) * c_m * xp;
    const double tg = d_next * xp * x;
    g += tg;
    dg += (m + 1.0) * d_next * xp;
    c_prev2 = c_prev;
    c_prev = c_m;
    d_prev = d_curr;
    d_curr = d_next;
    xp *= x;
    if (std::abs(t1) <= 1e-18 * std::abs(s1) && std::abs(tg) <= 1e-18 * std::abs(g) && m > 3)
      break;
  }
  const double lx = std::log(x);
  return {s1, ds1, -2.0 * s1 * lx + g, -2.0 * ds1 * lx - 2.0 * s1 / x + dg};
}

// Splits the boundary pair at `x_signed` into regular and irregular parts.
SideData decompose(BoundaryPair raw, double peak, double E, double x_signed,
                   BoundaryValueMode mode) {
  const double ax = std::abs(x_signed);
  const auto b = frobenius_basis(E, ax);
  // Mirror the basis onto x < 0 so that the regular solution has slope +1
  // and the irregular one value +1 at the origin on either side.
  double r1 = b.y1, dr1 = b.dy1, r2 = b.y2, dr2 = b.dy2;
  if (x_signed < 0.0) {
    r1 = -b.y1;
    dr1 = b.dy1;
    r2 = b.y2;
    dr2 = -b.dy2;
  }
  const double det = r1 * dr2 - r2 * dr1;
  const double slope = (raw.value * dr2 - r2 * raw.derivative) / det;
  const double limit = (r1 * raw.derivative - dr1 * raw.value) / det;
  SideData d;
  d.raw = raw;
  d.limit_value = limit;
  d.regular_slope = slope;
  d.regularity_defect = std::min(1.0, std::abs(limit) / peak);
  d.interface = {mode == BoundaryValueMode::frobenius ? limit : raw.value, raw.derivative};
  return d;
}

double rotation_determinant(double theta, BoundaryPair l, BoundaryPair r) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double rv = c * r.value - s * r.derivative;
  const double rd = s * r.value + c * r.derivative;
  return l.value * rd - l.derivative * rv;
}

ShootResult shoot_on(double E, const ExtensionParams& params, const GridSpec& grid,
                     const std::vector<double>& xs) {
  if (!(E < 0.0)) throw std::invalid_argument("shoot: E must be negative (bound states)");
  // The potential is even, so the solution decaying towards -L is the mirror
  // image u(-x) of the one decaying towards +L; its slope flips sign.
  const auto traj = integrate_inward(E, xs, false);
  ShootResult res;
  res.energy = E;
  res.right = decompose(traj.inner, traj.peak, E, grid.epsilon, grid.value_mode);
  res.left = decompose({traj.inner.value, -traj.inner.derivative}, traj.peak, E, -grid.epsilon,
                       grid.value_mode);
  if (params.variant == ExtensionParams::Variant::dirichlet)
    res.determinant = res.left.interface.value * res.right.interface.value;
  else
    res.determinant = rotation_determinant(params.theta, res.left.interface, res.right.interface);
  return res;
}

std::vector<double> energy_scan_grid(const ShootingConfig& cfg) {
  const double lo = std::log10(-cfg.e_hi);
  const double hi = std::log10(-cfg.e_lo);
  const int points = std::max(2, static_cast<int>(std::ceil((hi - lo) * cfg.points_per_decade)) + 1);
  std::vector<double> es(points);
  for (int i = 0; i < points; ++i)
    es[i] = -std::pow(10.0, hi - (hi - lo) * i / (points - 1));
  es.front() = cfg.e_lo;
  es.back() = cfg.e_hi;
  return es;
}

// Branch functions whose sign changes locate eigenvalues. The rotation
// variant has a single branch (the determinant); dirichlet has one per side.
std::vector<double> branch_values(const ShootResult& r, const ExtensionParams& params) {
  if (params.variant == ExtensionParams::Variant::dirichlet)
    return {r.left.interface.value, r.right.interface.value};
  return {r.determinant};
}

double bisect(double lo, double hi, double f_lo, std::size_t branch,
              const ExtensionParams& params, const GridSpec& grid, const ShootingConfig& cfg,
              const std::vector<double>& xs) {
  for (int it = 0; it < cfg.max_iter && hi - lo > cfg.bisection_tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = branch_values(shoot_on(mid, params, grid, xs), params)[branch];
    if (f_mid == 0.0) return mid;
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double symmetry_defect(const WavefunctionSample& s, double sign) {
  // Grid is mirror-symmetric: index i pairs with n-1-i.
  const std::size_t n = s.size();
  double num = 0.0, den = 0.0;
  for (std::size_t i = n / 2; i + 1 < n; ++i) {
    const double w = s.abscissae[i + 1] - s.abscissae[i];
    const double a = s.values[i].real();
    const double b = s.values[n - 1 - i].real();
    num += w * (a + sign * b) * (a + sign * b);
    den += w * 2.0 * (a * a + b * b);
  }
  return den > 0.0 ? num / den : 1.0;
}

Parity classify_parity(const WavefunctionSample& s) {
  constexpr double kThreshold = 0.01;
  if (symmetry_defect(s, 1.0) < kThreshold) return Parity::odd;
  if (symmetry_defect(s, -1.0) < kThreshold) return Parity::even;
  return Parity::none;
}

}  // namespace

ShootResult shoot(double E, const ExtensionParams& params, const GridSpec& grid) {
  params.validate();
  return shoot_on(E, params, grid, solver_abscissae(grid));
}

SpectrumResult scan_spectrum(const ExtensionParams& params, const GridSpec& grid,
                             const ShootingConfig& cfg) {
  params.validate();
  cfg.validate();
  const auto xs = solver_abscissae(grid);
  const auto es = energy_scan_grid(cfg);

  std::vector<std::vector<double>> f(es.size());
  for (std::size_t i = 0; i < es.size(); ++i) f[i] = branch_values(shoot_on(es[i], params, grid, xs), params);

  struct Root {
    double energy;
    std::size_t branch;
  };
  std::vector<Root> roots;
  const std::size_t branches = f.front().size();
  for (std::size_t b = 0; b < branches; ++b) {
    for (std::size_t i = 0; i + 1 < es.size(); ++i) {
      const double fa = f[i][b];
      const double fb = f[i + 1][b];
      if (fa == 0.0) {
        roots.push_back({es[i], b});
      } else if ((fa < 0.0) != (fb < 0.0) && fb != 0.0) {
        roots.push_back({bisect(es[i], es[i + 1], fa, b, params, grid, cfg, xs), b});
      }
    }
    if (f.back()[b] == 0.0) roots.push_back({es.back(), b});
  }
  std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) { return a.energy < b.energy; });

  SpectrumResult result;
  result.params = params;
  result.grid = grid;
  for (std::size_t i = 0; i < roots.size();) {
    std::size_t j = i + 1;
    double sum = roots[i].energy;
    while (j < roots.size() && roots[j].energy - roots[j - 1].energy <= cfg.degeneracy_tol) {
      sum += roots[j].energy;
      ++j;
    }
    SpectrumLevel level;
    level.energy = sum / static_cast<double>(j - i);
    level.multiplicity = static_cast<int>(j - i);
    const auto sr = shoot_on(level.energy, params, grid, xs);
    level.regularity_defect = std::max(sr.left.regularity_defect, sr.right.regularity_defect);
    level.parity = level.multiplicity > 1 ? Parity::none
                                          : classify_parity(eigenfunction(level.energy, params, grid));
    (level.regularity_defect <= cfg.regularity_tol ? result.levels : result.rejected).push_back(level);
    i = j;
  }
  return result;
}

SpectrumResult solve_spectrum(const ExtensionParams& params, const GridSpec& grid,
                              const ShootingConfig& cfg, int count) {
  if (count < 1) throw std::invalid_argument("solve_spectrum: count must be >= 1");
  auto result = scan_spectrum(params, grid, cfg);
  if (static_cast<int>(result.levels.size()) < count)
    throw BracketExhausted(fmt::format(
        "solve_spectrum: found {} admissible level(s) in [{}, {}], {} requested ({})",
        result.levels.size(), cfg.e_lo, cfg.e_hi, count, params.label()));
  result.levels.resize(count);
  return result;
}

WavefunctionSample eigenfunction(double E, const ExtensionParams& params, const GridSpec& grid,
                                 int branch) {
  params.validate();
  const auto xs = solver_abscissae(grid);
  if (!(E < 0.0)) throw std::invalid_argument("eigenfunction: E must be negative");
  const auto traj = integrate_inward(E, xs, true);

  double c_left;
  if (params.variant == ExtensionParams::Variant::dirichlet) {
    c_left = branch >= 0 ? 1.0 : -1.0;
  } else {
    const auto sr = shoot_on(E, params, grid, xs);
    const auto l = sr.left.interface;
    const auto r = sr.right.interface;
    const double c = std::cos(params.theta), s = std::sin(params.theta);
    const double rv = c * r.value - s * r.derivative;
    const double rd = s * r.value + c * r.derivative;
    // Least-squares amplitude with c_left * l = R r.
    c_left = (l.value * rv + l.derivative * rd) / (l.value * l.value + l.derivative * l.derivative);
  }

  WavefunctionSample s;
  s.space = Space::coordinate;
  s.abscissae = mirror_grid(xs);
  const std::size_t n = xs.size();
  s.values.resize(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    s.values[n - 1 - i] = c_left * traj.value[i];
    s.values[n + i] = traj.value[i];
  }
  double norm = 0.0;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (i == n - 1) continue;  // the excluded gap (-eps, eps)
    const double h = s.abscissae[i + 1] - s.abscissae[i];
    norm += 0.5 * h * (std::norm(s.values[i]) + std::norm(s.values[i + 1]));
  }
  const double sign = traj.inner.derivative < 0.0 ? -1.0 : 1.0;
  const double scale = sign / std::sqrt(norm);
  for (auto& v : s.values) v *= scale;
  return s;
}

namespace {

using cplx = std::complex<double>;
constexpr int kEdgePoints = 5;

// Value and first derivative at 0 of the interpolating polynomial through
// the kEdgePoints innermost samples of one half-line.
std::pair<cplx, cplx> edge_limit(const WavefunctionSample& s, const std::array<std::size_t, kEdgePoints>& idx) {
  double x[kEdgePoints];
  for (int i = 0; i < kEdgePoints; ++i) x[i] = s.abscissae[idx[i]];
  cplx value = 0.0, slope = 0.0;
  for (int i = 0; i < kEdgePoints; ++i) {
    // l_i(0) and l_i'(0) for the Lagrange basis
    double denom = 1.0, l0 = 1.0, l1 = 0.0;
    for (int j = 0; j < kEdgePoints; ++j) {
      if (j == i) continue;
      denom *= x[i] - x[j];
      l1 = l1 * (-x[j]) + l0;
      l0 *= -x[j];
    }
    value += s.values[idx[i]] * (l0 / denom);
    slope += s.values[idx[i]] * (l1 / denom);
  }
  return {value, slope};
}

// Boundary form W = conj(phi) psi' - conj(phi') psi at the origin, from one side.
cplx boundary_form_limit(const WavefunctionSample& a, const WavefunctionSample& b,
                         const std::array<std::size_t, kEdgePoints>& idx) {
  const auto [va, da] = edge_limit(a, idx);
  const auto [vb, db] = edge_limit(b, idx);
  return std::conj(va) * db - std::conj(da) * vb;
}

}  // namespace

double boundary_defect(const WavefunctionSample& phi, const WavefunctionSample& psi,
                       const ExtensionParams& params) {
  params.validate();
  phi.validate();
  psi.validate();
  if (phi.space != Space::coordinate || psi.space != Space::coordinate)
    throw std::invalid_argument("boundary_defect: coordinate-space samples required");
  if (phi.abscissae != psi.abscissae)
    throw std::invalid_argument("boundary_defect: grid mismatch between samples");
  const auto& x = phi.abscissae;
  const std::size_t n = x.size();
  const auto first_pos = static_cast<std::size_t>(
      std::upper_bound(x.begin(), x.end(), 0.0) - x.begin());
  if (first_pos < n && first_pos > 0 && x[first_pos - 1] == 0.0)
    throw std::invalid_argument("boundary_defect: grid must exclude the origin");
  if (first_pos < kEdgePoints || n - first_pos < kEdgePoints)
    throw std::invalid_argument("boundary_defect: need at least 5 points on each side of 0");
  const double scale = std::max(std::abs(x.front()), std::abs(x.back()));
  for (std::size_t i = 0; i < n; ++i)
    if (std::abs(x[i] + x[n - 1 - i]) > 1e-12 * scale)
      throw std::invalid_argument("boundary_defect: grid must be symmetric about 0");

  const std::size_t p = first_pos;
  const cplx w_right = boundary_form_limit(phi, psi, {p, p + 1, p + 2, p + 3, p + 4});
  const cplx w_left = boundary_form_limit(phi, psi, {p - 1, p - 2, p - 3, p - 4, p - 5});
  // The form itself does not depend on the extension; theta only decides which
  // functions are admissible arguments.
  return std::abs(w_left - w_right);
}

}  // namespace hydrogen1d
