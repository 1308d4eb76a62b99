#include "hydrogen1d/analytic_core.hpp"

#include <cmath>
#include <fmt/format.h>
#include <numbers>

#include "hydrogen1d/special_functions.hpp"

namespace hydrogen1d {

PhysicalScales PhysicalScales::si() {
  return {1.054571817e-34, 9.1093837015e-31, 2.307077552e-28, 5.29177210903e-11};
}

void PhysicalScales::validate() const {
  if (!(hbar > 0.0 && mass > 0.0 && charge_sq > 0.0 && bohr_radius > 0.0))
    throw std::invalid_argument("PhysicalScales: all scales must be strictly positive");
}

bool PhysicalScales::is_consistent(double rel_tol) const {
  const double a0 = hbar * hbar / (mass * charge_sq);
  return std::abs(a0 - bohr_radius) <= rel_tol * bohr_radius;
}

QuantumNumber::QuantumNumber(int n) : n_(n) {
  if (n < 1)
    throw std::invalid_argument(
        fmt::format("n must be >= 1 (got {}); the n = 0 function vanishes everywhere", n));
}

std::string to_string(Parity p) {
  switch (p) {
    case Parity::odd: return "odd";
    case Parity::even: return "even";
    case Parity::none: return "none";
  }
  return "none";
}

Parity parity_from_string(const std::string& s) {
  if (s == "odd") return Parity::odd;
  if (s == "even") return Parity::even;
  if (s == "none") return Parity::none;
  throw std::invalid_argument("unknown parity label: " + s);
}

std::string to_string(Space s) { return s == Space::coordinate ? "coordinate" : "momentum"; }

Space space_from_string(const std::string& s) {
  if (s == "coordinate" || s == "x") return Space::coordinate;
  if (s == "momentum" || s == "k") return Space::momentum;
  throw std::invalid_argument("unknown space label: " + s);
}

void WavefunctionSample::validate() const {
  if (abscissae.size() != values.size())
    throw std::invalid_argument("WavefunctionSample: abscissae and values differ in length");
  for (std::size_t i = 1; i < abscissae.size(); ++i)
    if (!(abscissae[i] > abscissae[i - 1]))
      throw std::invalid_argument("WavefunctionSample: abscissae must be strictly increasing");
}

double energy(QuantumNumber n, const PhysicalScales& scales) {
  scales.validate();
  const double nn = n.value();
  return -scales.energy_unit() / (2.0 * nn * nn);
}

double normalization(QuantumNumber n, const PhysicalScales& scales) {
  scales.validate();
  const int k = n.value();
  const double nf = factorial(k);
  const double norm_integral = 2.0 * k * nf * nf * nf / factorial(k - 1);
  return 1.0 / std::sqrt(k * scales.bohr_radius * norm_integral);
}

EigenState eigen_state(QuantumNumber n, const PhysicalScales& scales) {
  return {n, energy(n, scales), Parity::odd, normalization(n, scales)};
}

namespace {

// psi = amplitude(n) * sgn(z) f(|z|) with f(z) = z e^{-z/2} L_{n-1}^1(z).
double amplitude(QuantumNumber n, const PhysicalScales& scales) {
  return normalization(n, scales) * factorial(n.value());
}

// e^{-z/2} underflows past this; the polynomial factor cannot compensate.
constexpr double kMaxHalfZ = 700.0;

}  // namespace

double psi(QuantumNumber n, double x, const PhysicalScales& scales) {
  const double z = scaled_coordinate(n, x, scales);
  const double az = std::abs(z);
  if (0.5 * az > kMaxHalfZ) return 0.0;
  return amplitude(n, scales) * z * std::exp(-0.5 * az) * laguerre_std(n.value() - 1, 1, az);
}

double psi_derivative(QuantumNumber n, double x, const PhysicalScales& scales) {
  const double z = scaled_coordinate(n, x, scales);
  const double az = std::abs(z);
  if (0.5 * az > kMaxHalfZ) return 0.0;
  const int k = n.value() - 1;
  const double l0 = laguerre_std(k, 1, az);
  const double l1 = laguerre_std_derivative(k, 1, az, 1);
  const double dzdx = 2.0 / (n.value() * scales.bohr_radius);
  const double df = std::exp(-0.5 * az) * ((1.0 - 0.5 * az) * l0 + az * l1);
  return amplitude(n, scales) * dzdx * df;
}

double psi_second_derivative(QuantumNumber n, double x, const PhysicalScales& scales) {
  const double z = scaled_coordinate(n, x, scales);
  const double az = std::abs(z);
  if (0.5 * az > kMaxHalfZ) return 0.0;
  const int k = n.value() - 1;
  const double l0 = laguerre_std(k, 1, az);
  const double l1 = laguerre_std_derivative(k, 1, az, 1);
  const double l2 = laguerre_std_derivative(k, 1, az, 2);
  const double dzdx = 2.0 / (n.value() * scales.bohr_radius);
  const double d2f =
      std::exp(-0.5 * az) * ((-1.0 + 0.25 * az) * l0 + (2.0 - az) * l1 + az * l2);
  const double sign = (z > 0.0) ? 1.0 : (z < 0.0 ? -1.0 : 0.0);
  return amplitude(n, scales) * dzdx * dzdx * sign * d2f;
}

namespace {

std::complex<double> ipow(std::complex<double> w, int n) {
  std::complex<double> r{1.0, 0.0};
  const bool invert = n < 0;
  for (int i = 0; i < std::abs(n); ++i) r *= w;
  return invert ? 1.0 / r : r;
}

}  // namespace

std::complex<double> momentum_bracket(int n, double q) {
  const std::complex<double> iq{0.0, q};
  return ipow((1.0 - iq) / (1.0 + iq), n) - ipow((1.0 + iq) / (1.0 - iq), n);
}

std::complex<double> phi(QuantumNumber n, double k, const PhysicalScales& scales) {
  scales.validate();
  const double na0 = n.value() * scales.bohr_radius;
  const double q = na0 * k;
  return std::sqrt(na0 / std::numbers::pi) / (1.0 + q * q) * momentum_bracket(n.value(), q);
}

namespace {

// P(z) with d^n/dz^n (z^{n-1} e^{-z}) / (n-1)! = e^{-z} P(z).
double residue_polynomial(int n, double z) {
  double sum = 0.0;
  for (int k = 0; k <= n - 1; ++k) {
    const double sign = ((n - k) % 2 == 0) ? 1.0 : -1.0;
    sum += binomial(n, k) * sign * std::pow(z, n - 1 - k) / factorial(n - 1 - k);
  }
  return sum;
}

}  // namespace

double residue_kernel(QuantumNumber n, double z, Side branch) {
  const double s = (branch == Side::positive) ? z : -z;
  return std::exp(-s) * residue_polynomial(n.value(), s);
}

double residue_wavefunction(QuantumNumber n, double z) {
  if (z == 0.0) return 0.0;
  // Combine the exponentials before evaluating so the tails stay finite.
  if (z > 0.0) return z * std::exp(-0.5 * z) * residue_polynomial(n.value(), z);
  return z * std::exp(0.5 * z) * residue_polynomial(n.value(), -z);
}

std::complex<double> half_line_solution(QuantumNumber n, Side side, double x,
                                        const PhysicalScales& scales) {
  const bool inside = (side == Side::positive) ? x > 0.0 : x < 0.0;
  if (!inside) return 0.0;
  return std::numbers::sqrt2 * psi(n, x, scales);
}

double half_line_derivative(QuantumNumber n, Side side, double x, Side from_side,
                            const PhysicalScales& scales) {
  bool inside;
  if (x > 0.0)
    inside = side == Side::positive;
  else if (x < 0.0)
    inside = side == Side::negative;
  else
    inside = side == from_side;
  if (!inside) return 0.0;
  return std::numbers::sqrt2 * psi_derivative(n, x, scales);
}

WavefunctionSample sample_psi(QuantumNumber n, std::span<const double> x,
                              const PhysicalScales& scales) {
  WavefunctionSample s;
  s.space = Space::coordinate;
  s.abscissae.assign(x.begin(), x.end());
  s.values.reserve(x.size());
  for (double xi : x) s.values.emplace_back(psi(n, xi, scales), 0.0);
  s.validate();
  return s;
}

WavefunctionSample sample_phi(QuantumNumber n, std::span<const double> k,
                              const PhysicalScales& scales) {
  WavefunctionSample s;
  s.space = Space::momentum;
  s.abscissae.assign(k.begin(), k.end());
  s.values.reserve(k.size());
  for (double ki : k) s.values.push_back(phi(n, ki, scales));
  s.validate();
  return s;
}

std::vector<double> linspace(double lo, double hi, int points) {
  if (points < 1) throw std::invalid_argument("linspace: points must be >= 1");
  if (points == 1) return {lo};
  std::vector<double> out(points);
  const double h = (hi - lo) / (points - 1);
  for (int i = 0; i < points; ++i) out[i] = lo + i * h;
  out.back() = hi;
  return out;
}

}  // namespace hydrogen1d
