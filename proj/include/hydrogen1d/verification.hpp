#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hydrogen1d/analytic_core.hpp"
#include "hydrogen1d/extension_solver.hpp"
#include "hydrogen1d/quadrature.hpp"

namespace hydrogen1d {

struct QuadratureSpec {
  /// Integration domain is [-halfwidth, halfwidth]. Unset means 40 n a0.
  std::optional<double> domain_halfwidth;
  /// Total nodes; split evenly between the two half-lines.
  int node_count = 2048;
  QuadratureScheme scheme = QuadratureScheme::gauss_legendre_composite;

  void validate() const;
  double halfwidth_for(int n, const PhysicalScales& scales = {}) const;
};

std::string to_string(QuadratureScheme s);
QuadratureScheme scheme_from_string(const std::string& s);

/// passed == (measured <= tolerance). Lower bounds are reported as
/// measured = threshold / observed with tolerance 1.
struct CheckResult {
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string detail;

  static CheckResult make(std::string name, double measured, double tolerance,
                          std::string detail = {});
  /// observed >= threshold, in the ratio form above.
  static CheckResult at_least(std::string name, double observed, double threshold,
                              std::string detail = {});
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool all_passed = true;

  void add(CheckResult c);
  void merge(const VerificationReport& other);
  /// Sorts by name and recomputes all_passed.
  void finalize();
};

// ---- integral checks -------------------------------------------------------

/// |int |phi_n|^2 dk - int |psi_n|^2 dx|.
CheckResult check_parseval(QuantumNumber n, const QuadratureSpec& quad,
                           const PhysicalScales& scales = {}, double tolerance = 1e-7);

/// Gram matrix of psi_1..psi_{n_max}; reports max |G - I| and the diagonal.
/// Default halfwidth is 40 n_max a0.
VerificationReport check_orthonormality(int n_max, const QuadratureSpec& quad,
                                        const PhysicalScales& scales = {},
                                        double tolerance = 1e-8);

/// Numerical transform (2 pi)^{-1/2} int e^{-ikx} psi_n dx against phi_n on
/// k_grid, after aligning one global phase.
CheckResult check_fourier_consistency(QuantumNumber n, const std::vector<double>& k_grid,
                                      const QuadratureSpec& quad,
                                      const PhysicalScales& scales = {},
                                      double tolerance = 1e-5);

/// Numerical Fourier transform used by check_fourier_consistency.
std::vector<std::complex<double>> fourier_transform_psi(QuantumNumber n,
                                                        const std::vector<double>& k_grid,
                                                        const QuadratureSpec& quad,
                                                        const PhysicalScales& scales = {});

/// max over x_grid of |hbar^2/2m psi'' + (e^2/|x| + E_n) psi| / (|E_n psi| + floor),
/// the floor being a small multiple of the summed term magnitudes.
CheckResult check_schrodinger_residual(QuantumNumber n, const std::vector<double>& x_grid,
                                       const PhysicalScales& scales = {},
                                       double tolerance = 1e-7);

// ---- matching condition at the origin ---------------------------------------

/// A trial function of the dimensionless coordinate z and its derivative.
/// The derivative at z = 0 is never requested.
struct TrialFunction {
  std::string name;
  std::function<double(double)> value;
  std::function<double(double)> derivative;
};

TrialFunction eigenstate_trial(QuantumNumber n);
TrialFunction half_line_trial(QuantumNumber n, Side side);
/// e^{-|z|/2}, the even kink.
TrialFunction even_kink_trial();

/// |f'(eps) - f'(-eps) + alpha (int_0^eps f/z dz - int_{-eps}^0 f/z dz)|.
double matching_residual(const TrialFunction& f, int alpha, double eps);

/// Least-squares slope of log r against log eps over residuals above 1e-14.
/// Empty when fewer than two points qualify.
std::optional<double> fitted_order(const std::vector<double>& eps, const std::vector<double>& r);

/// Per-eps checks r <= C eps plus a decay check (monotone, order >= 1).
VerificationReport check_matching(const TrialFunction& f, int alpha,
                                  const std::vector<double>& epsilons, double C = 1.0);
VerificationReport check_matching(QuantumNumber n, const std::vector<double>& epsilons,
                                  double C = 1.0);

// ---- the infinitely bound even candidate -----------------------------------

struct GroundStateCandidate {
  /// psi = c e^{-|x|/ell}; c defaults to the normalizing 1/sqrt(ell).
  double ell = 1.0;
  std::optional<double> c;
  double amplitude() const;
};

VerificationReport groundstate_rejection(const std::vector<double>& E_grid,
                                         const std::vector<double>& x_grid,
                                         const GroundStateCandidate& cand = {});

/// No determinant zero of the theta = 0 problem in [e_lo, e_hi).
CheckResult check_no_deep_state(const GridSpec& grid = {}, double e_lo = -50.0, double e_hi = -1.0);

// ---- semiclassical origin crossing -------------------------------------------

/// Classical turning point e^2 / |E_n|.
double turning_point(QuantumNumber n, const PhysicalScales& scales = {});

/// Time spent in [-delta/2, delta/2] over the time spent in an interval of
/// the same width centred at half the turning point.
double semiclassical_time_ratio(QuantumNumber n, double delta, const PhysicalScales& scales = {});

CheckResult check_semiclassical_exponent(QuantumNumber n, const std::vector<double>& deltas,
                                         const PhysicalScales& scales = {},
                                         double expected = 0.5, double tolerance = 0.05);

// ---- probability current -----------------------------------------------------

/// j = (hbar/m) Im(conj(phi) phi') on a uniform coordinate grid; 4th order
/// central differences inside, 2nd order at the two points nearest each end.
WavefunctionSample probability_current(const WavefunctionSample& sample,
                                       const PhysicalScales& scales = {});

/// Sample (psi_a + i psi_b)/sqrt(2) on a uniform grid.
WavefunctionSample superposition_sample(QuantumNumber a, QuantumNumber b,
                                        const std::vector<double>& x,
                                        const PhysicalScales& scales = {});

/// One-sided limits j(0-) and j(0+), cubic extrapolation from points at
/// least three cells from the origin on a symmetric grid excluding 0.
std::pair<double, double> current_limits_at_origin(const WavefunctionSample& current);

VerificationReport check_current(int n_max, const PhysicalScales& scales = {});

// ---- boundary form -----------------------------------------------------------

/// Symmetric grid (-L..-h/2, h/2..L) with spacing h, excluding the origin.
std::vector<double> symmetric_grid(double halfwidth, double h);

VerificationReport check_boundary_defect(double h = 1e-3, double halfwidth = 20.0);

/// The kink e^{-|x|} against psi_1 at theta = 0.
double kink_defect_against_ground(double h = 1e-3, double halfwidth = 20.0);

}  // namespace hydrogen1d
