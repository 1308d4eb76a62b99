#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "hydrogen1d/analytic_core.hpp"

namespace hydrogen1d {

/// Boundary condition at the origin selecting a self-adjoint extension.
///
/// rotation(theta): (phi(0-), phi'(0-)) = R(theta) (phi(0+), phi'(0+)) with
/// R the 2x2 rotation matrix; theta = 0 is continuity of value and slope.
/// dirichlet: phi(0-) = phi(0+) = 0 with the two half-lines decoupled.
struct ExtensionParams {
  enum class Variant { rotation, dirichlet };

  Variant variant = Variant::rotation;
  double theta = 0.0;

  static ExtensionParams rotation(double theta);
  static ExtensionParams dirichlet() { return {Variant::dirichlet, 0.0}; }

  void validate() const;
  std::string label() const;
};

/// How the boundary value at the origin is read off the solution at +-epsilon.
enum class BoundaryValueMode {
  /// Limit at the origin, extrapolated through the local Frobenius basis
  /// (regular ~ x, irregular ~ 1 - 2x ln|x|).
  frobenius,
  /// The value at +-epsilon itself; first-order accurate in epsilon.
  raw,
};

/// Truncated integration domain, atomic units (x in Bohr radii).
/// The equation is integrated on [-L, -eps] and [eps, L]; the Coulomb term
/// is never evaluated inside (-eps, eps).
struct GridSpec {
  double halfwidth_L = 320.0;
  double epsilon = 1e-4;
  /// Finest step, used next to +-epsilon.
  double step = 2.5e-5;
  /// Steps grow geometrically away from the origin up to this size.
  double max_step = 1.0 / 32.0;
  BoundaryValueMode value_mode = BoundaryValueMode::frobenius;

  void validate() const;
};

struct ShootingConfig {
  double e_lo = -2.0;
  double e_hi = -0.01;
  double bisection_tol = 1e-13;
  int max_iter = 200;
  int points_per_decade = 400;
  double degeneracy_tol = 1e-6;
  /// Roots whose irregular (log-singular) fraction exceeds this are not in
  /// the operator domain: their slope has no limit at the origin.
  double regularity_tol = 0.02;

  void validate() const;
};

struct BoundaryPair {
  double value;
  double derivative;
};

/// Boundary data of one decaying solution at the inner edge of its half-line.
/// Normalized so that |(raw.value, raw.derivative)| = 1.
struct SideData {
  BoundaryPair raw;
  /// Coefficient of the irregular Frobenius solution: the value limit.
  double limit_value;
  /// Coefficient of the regular Frobenius solution: the slope limit when
  /// limit_value vanishes.
  double regular_slope;
  /// |limit_value| / max |u| over the half-line, capped at 1; zero for
  /// states whose slope has a finite limit at the origin.
  double regularity_defect;
  /// The pair entering the interface condition.
  BoundaryPair interface;
};

struct ShootResult {
  double energy;
  /// Zero exactly at eigenvalues. rotation: det[left | R right];
  /// dirichlet: left.value * right.value.
  double determinant;
  SideData left;
  SideData right;
};

struct SpectrumLevel {
  double energy;
  int multiplicity;
  Parity parity;
  double regularity_defect;
};

struct SpectrumResult {
  /// Accepted levels, ascending in energy.
  std::vector<SpectrumLevel> levels;
  /// Determinant zeros whose solutions fail the regularity requirement.
  std::vector<SpectrumLevel> rejected;
  ExtensionParams params;
  GridSpec grid;
};

class BracketExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IntegrationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// left - R(theta) right for rotation; (left.value, right.value) for dirichlet.
std::array<double, 2> interface_residual(const ExtensionParams& params, BoundaryPair left,
                                         BoundaryPair right);

/// Integrates -1/2 psi'' - psi/|x| = E psi inward from +-L and evaluates the
/// matching determinant at +-epsilon. Requires E < 0.
ShootResult shoot(double E, const ExtensionParams& params, const GridSpec& grid);

/// All determinant zeros in [cfg.e_lo, cfg.e_hi], classified into accepted
/// and rejected levels. Does not throw when few levels exist.
SpectrumResult scan_spectrum(const ExtensionParams& params, const GridSpec& grid,
                             const ShootingConfig& cfg);

/// The lowest `count` accepted levels; throws BracketExhausted if the
/// bracket holds fewer.
SpectrumResult solve_spectrum(const ExtensionParams& params, const GridSpec& grid,
                              const ShootingConfig& cfg, int count);

/// Normalized numerical eigenfunction at energy E on the solver grid (both
/// half-lines, excluding (-eps, eps)). For dirichlet `branch` picks the even
/// (+1) or odd (-1) combination of the two half-line solutions.
WavefunctionSample eigenfunction(double E, const ExtensionParams& params, const GridSpec& grid,
                                 int branch = -1);

/// |W(0-) - W(0+)| for the boundary form W = conj(phi) psi' - conj(phi') psi,
/// the one-sided limits taken from quartic interpolation through the five
/// innermost samples on each side. The grid must be symmetric about 0 and
/// exclude it.
double boundary_defect(const WavefunctionSample& phi, const WavefunctionSample& psi,
                       const ExtensionParams& params);

/// Positive abscissae eps = x_0 < x_1 < ... = L used by the integrator.
std::vector<double> solver_abscissae(const GridSpec& grid);

/// Grid symmetric about the origin: -x_{n-1}, ..., -x_0, x_0, ..., x_{n-1}.
std::vector<double> mirror_grid(const std::vector<double>& positive);

}  // namespace hydrogen1d
