#include "hydrogen1d/special_functions.hpp"

#include <cmath>
#include <fmt/format.h>

namespace hydrogen1d {

void SeriesControl::validate() const {
  if (max_terms < 1)
    throw std::invalid_argument("SeriesControl: max_terms must be >= 1");
  if (!(rel_tol > 0.0))
    throw std::invalid_argument("SeriesControl: rel_tol must be > 0");
}

double factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  if (n > 170) throw RangeError(fmt::format("factorial: {}! overflows double", n));
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

namespace {

void check_degree(int n, int m, const char* who) {
  if (n < 0 || m < 0)
    throw std::invalid_argument(fmt::format("{}: n and m must be non-negative", who));
  if (n > kMaxLaguerreDegree)
    throw RangeError(fmt::format("{}: degree {} exceeds supported maximum {}", who, n,
                                 kMaxLaguerreDegree));
}

}  // namespace

double laguerre_std(int n, int m, double z) {
  check_degree(n, m, "laguerre_std");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double curr = 1.0 + m - z;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + m + 1.0 - z) * curr - (k + m) * prev) / (k + 1.0);
    prev = curr;
    curr = next;
  }
  if (!std::isfinite(curr))
    throw RangeError(fmt::format("laguerre_std: overflow at n={}, z={}", n, z));
  return curr;
}

double laguerre_std_derivative(int n, int m, double z, int order) {
  if (order < 0) throw std::invalid_argument("laguerre_std_derivative: negative order");
  check_degree(n, m, "laguerre_std_derivative");
  if (order > n) return 0.0;
  const double sign = (order % 2 == 0) ? 1.0 : -1.0;
  return sign * laguerre_std(n - order, m + order, z);
}

double laguerre_paper(int n, double z) {
  if (n < 1) throw std::invalid_argument("laguerre_paper: n must be >= 1");
  if (n - 1 > kMaxLaguerreDegree)
    throw RangeError(fmt::format("laguerre_paper: n={} exceeds supported range", n));
  return -factorial(n) * laguerre_std(n - 1, 1, z);
}

double kummer_1f1(double a, double b, double z, const SeriesControl& ctrl) {
  ctrl.validate();
  if (b <= 0.0 && b == std::floor(b))
    throw std::invalid_argument("kummer_1f1: b must not be a non-positive integer");

  const bool terminating = (a <= 0.0 && a == std::floor(a));
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < ctrl.max_terms; ++k) {
    if (terminating && a + k == 0.0) return sum;
    term *= (a + k) / (b + k) * z / (k + 1.0);
    sum += term;
    if (!std::isfinite(sum))
      throw RangeError(fmt::format("kummer_1f1: overflow at a={}, b={}, z={}", a, b, z));
    // Terms only shrink monotonically once k exceeds |z| and |a|.
    if (!terminating && k + 1.0 > std::abs(z) && k + 1.0 > std::abs(a) &&
        std::abs(term) <= ctrl.rel_tol * std::abs(sum))
      return sum;
  }
  throw SeriesError(fmt::format(
      "kummer_1f1: no convergence within {} terms (a={}, b={}, z={})", ctrl.max_terms, a, b, z));
}

double laguerre_kummer_constant(int n) {
  if (n < 1) throw std::invalid_argument("laguerre_kummer_constant: n must be >= 1");
  return laguerre_paper(n, 0.0) / kummer_1f1(1.0 - n, 2.0, 0.0);
}

}  // namespace hydrogen1d
