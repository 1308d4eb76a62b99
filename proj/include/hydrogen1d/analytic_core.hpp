#pragma once

#include <complex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hydrogen1d {

/// Unit system for the Hamiltonian -hbar^2/2m d^2/dx^2 - e^2/|x|.
/// Defaults to atomic units, where E_n = -1/(2 n^2).
struct PhysicalScales {
  double hbar = 1.0;
  double mass = 1.0;
  double charge_sq = 1.0;
  double bohr_radius = 1.0;

  static PhysicalScales atomic() { return {}; }
  /// CODATA 2018 electron values in SI (J s, kg, J m, m).
  static PhysicalScales si();

  void validate() const;
  /// hbar^2 / (m a0^2); one Hartree in these units.
  double energy_unit() const { return hbar * hbar / (mass * bohr_radius * bohr_radius); }
  /// True when a0 = hbar^2 / (m e^2) to the given relative tolerance.
  bool is_consistent(double rel_tol = 1e-6) const;
};

/// Principal quantum number n >= 1.
class QuantumNumber {
 public:
  explicit QuantumNumber(int n);
  int value() const { return n_; }
  friend bool operator==(QuantumNumber, QuantumNumber) = default;

 private:
  int n_;
};

enum class Parity { odd, even, none };
std::string to_string(Parity p);
Parity parity_from_string(const std::string& s);

enum class Side { positive, negative };

/// Closed-form bound state.
struct EigenState {
  QuantumNumber n;
  double energy;
  Parity parity;
  /// Positive magnitude A_n of the amplitude multiplying z e^{-|z|/2} L_n^1(|z|).
  double norm_constant;
};

enum class Space { coordinate, momentum };
std::string to_string(Space s);
Space space_from_string(const std::string& s);

/// Wavefunction values on an increasing grid of positions or wavenumbers.
struct WavefunctionSample {
  std::vector<double> abscissae;
  std::vector<std::complex<double>> values;
  Space space = Space::coordinate;

  void validate() const;
  std::size_t size() const { return abscissae.size(); }
};

double energy(QuantumNumber n, const PhysicalScales& scales = {});

/// A_n from the Laguerre norm integral
///   int_0^inf e^-z z^2 [L_n^1(z)]^2 dz = 2n (n!)^3 / (n-1)!.
double normalization(QuantumNumber n, const PhysicalScales& scales = {});

EigenState eigen_state(QuantumNumber n, const PhysicalScales& scales = {});

/// Dimensionless coordinate z = 2x / (n a0).
inline double scaled_coordinate(QuantumNumber n, double x, const PhysicalScales& scales = {}) {
  return 2.0 * x / (n.value() * scales.bohr_radius);
}

/// Normalized odd eigenfunction psi_n(x), positive just right of the origin.
double psi(QuantumNumber n, double x, const PhysicalScales& scales = {});
/// d psi_n / dx, exact (Laguerre derivative identities). Even in x.
double psi_derivative(QuantumNumber n, double x, const PhysicalScales& scales = {});
/// d^2 psi_n / dx^2 for x != 0, exact. Odd in x.
double psi_second_derivative(QuantumNumber n, double x, const PhysicalScales& scales = {});

/// Momentum-space eigenfunction
///   phi_n(k) = sqrt(a0 n / pi) / (1 + q^2) [ ((1-iq)/(1+iq))^n - ((1+iq)/(1-iq))^n ],
/// q = n a0 k. Purely imaginary and odd for real k.
std::complex<double> phi(QuantumNumber n, double k, const PhysicalScales& scales = {});

/// The braced difference of phi for any integer n, including the
/// excluded n = 0 where it vanishes for every q.
std::complex<double> momentum_bracket(int n, double q);

/// F_+(z) = 1/(n-1)! d^n/dz^n (z^(n-1) e^-z), expanded by the Leibniz rule;
/// F_-(z) = F_+(-z).
double residue_kernel(QuantumNumber n, double z, Side branch);

/// Unnormalized eigenfunction assembled from the residue kernels:
/// z e^{z/2} F_+(z) for z > 0 and z e^{-z/2} F_-(z) for z < 0.
double residue_wavefunction(QuantumNumber n, double z);

/// State confined to one half-line: sqrt(2) psi_n on `side`, zero elsewhere.
std::complex<double> half_line_solution(QuantumNumber n, Side side, double x,
                                        const PhysicalScales& scales = {});
/// One-sided derivative of half_line_solution; at x == 0 the limit from
/// `side` is returned when `from_side` matches, zero otherwise.
double half_line_derivative(QuantumNumber n, Side side, double x, Side from_side,
                            const PhysicalScales& scales = {});

WavefunctionSample sample_psi(QuantumNumber n, std::span<const double> x,
                              const PhysicalScales& scales = {});
WavefunctionSample sample_phi(QuantumNumber n, std::span<const double> k,
                              const PhysicalScales& scales = {});

/// Evenly spaced grid of `points` values on [lo, hi].
std::vector<double> linspace(double lo, double hi, int points);

}  // namespace hydrogen1d
