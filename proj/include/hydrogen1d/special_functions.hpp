#pragma once

#include <stdexcept>

namespace hydrogen1d {

/// Thrown when an argument is outside the range that double precision
/// supports for a given function (degree too large, result overflow).
class RangeError : public std::range_error {
 public:
  using std::range_error::range_error;
};

/// Thrown when a power series fails to reach its tolerance.
class SeriesError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Highest polynomial degree evaluated in double precision.
inline constexpr int kMaxLaguerreDegree = 30;

/// Truncation control for the Kummer series.
struct SeriesControl {
  int max_terms = 1000;
  double rel_tol = 1e-16;

  void validate() const;
};

/// n! as a double, exact for n <= 22. Throws RangeError beyond 170.
double factorial(int n);

/// Binomial coefficient C(n, k) as a double.
double binomial(int n, int k);

/// Standard (Gradshteyn-Ryzhik 8.970) associated Laguerre polynomial
///   L_n^m(z) = (1/n!) e^z z^-m d^n/dz^n (e^-z z^(n+m)),
/// evaluated with the three-term recurrence
///   (k+1) L_{k+1} = (2k+m+1-z) L_k - (k+m) L_{k-1}.
double laguerre_std(int n, int m, double z);

/// j-th derivative of laguerre_std(n, m, .) at z, using
/// d/dz L_n^m = -L_{n-1}^{m+1}.
double laguerre_std_derivative(int n, int m, double z, int order);

/// The alternate convention L_n^1(z) = n e^z d^n/dz^n (z^(n-1) e^-z).
/// Computed as -n! * laguerre_std(n-1, 1, z); n >= 1.
double laguerre_paper(int n, double z);

/// Confluent hypergeometric function 1F1(a; b; z) by direct power series.
/// Terminates exactly when a is a non-positive integer.
double kummer_1f1(double a, double b, double z, const SeriesControl& ctrl = {});

/// Constant C_n with laguerre_paper(n, z) = C_n * 1F1(1-n; 2; z).
/// Fixed by evaluating both sides at z = 0, which gives -n * n!.
double laguerre_kummer_constant(int n);

}  // namespace hydrogen1d
