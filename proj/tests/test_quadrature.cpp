#include <doctest.h>

#include <cmath>
#include <complex>
#include <future>
#include <numbers>

#include "hydrogen1d/quadrature.hpp"

using namespace hydrogen1d;

TEST_CASE("gauss_legendre: weights, symmetry and polynomial exactness") {
  for (int n : {1, 2, 3, 7, 16, 33, 64}) {
    const auto& r = gauss_legendre(n);
    REQUIRE(r.nodes.size() == static_cast<std::size_t>(n));
    double wsum = 0.0;
    for (int i = 0; i < n; ++i) {
      wsum += r.weights[i];
      CHECK(r.weights[i] > 0.0);
      CHECK(r.nodes[i] == doctest::Approx(-r.nodes[n - 1 - i]).epsilon(1e-15));
      if (i) CHECK(r.nodes[i] > r.nodes[i - 1]);
    }
    CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
    // exact through degree 2n - 1
    for (int deg = 0; deg <= 2 * n - 1; ++deg) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += r.weights[i] * std::pow(r.nodes[i], deg);
      const double want = (deg % 2) ? 0.0 : 2.0 / (deg + 1);
      CHECK(std::abs(s - want) < 1e-13);
    }
  }
  CHECK_THROWS_AS(gauss_legendre(0), std::invalid_argument);
}

TEST_CASE("gauss_legendre: cached and safe under concurrent first use") {
  std::vector<std::future<const GaussLegendreRule*>> jobs;
  for (int i = 0; i < 8; ++i)
    jobs.push_back(std::async(std::launch::async, [] { return &gauss_legendre(47); }));
  const auto* first = jobs.front().get();
  for (std::size_t i = 1; i < jobs.size(); ++i) CHECK(jobs[i].get() == first);
}

TEST_CASE("panel_layout") {
  CHECK(panel_layout(2048).panels == 32);
  CHECK(panel_layout(2048).nodes_per_panel == 64);
  CHECK(panel_layout(16).panels == 1);
  CHECK(panel_layout(16).nodes_per_panel == 16);
  CHECK(panel_layout(100).panels == 2);
  CHECK(panel_layout(100).nodes_per_panel == 50);
  CHECK_THROWS_AS(panel_layout(0), std::invalid_argument);
}

TEST_CASE("integrate: smooth integrands") {
  const auto f = [](double x) { return std::exp(-x) * std::cos(3.0 * x); };
  const double want = (1.0 - std::exp(-4.0) * (std::cos(12.0) - 3.0 * std::sin(12.0))) / 10.0;
  CHECK(integrate(f, 0.0, 4.0, 256) == doctest::Approx(want).epsilon(1e-14));
  CHECK(integrate(f, 0.0, 4.0, 4001, QuadratureScheme::trapezoid_refined) ==
        doctest::Approx(want).epsilon(1e-11));
  CHECK(integrate([](double) { return 1.0; }, -2.0, 3.0, 2) == doctest::Approx(5.0));
  CHECK_THROWS_AS(integrate(f, 0.0, 1.0, 1), std::invalid_argument);
}

TEST_CASE("integrate: complex-valued integrands") {
  const auto f = [](double x) { return std::polar(1.0, x); };
  const auto got = integrate(f, 0.0, std::numbers::pi, 128);
  CHECK(got.real() == doctest::Approx(0.0).scale(1.0));
  CHECK(got.imag() == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("trapezoid_refined converges at fourth order") {
  const auto f = [](double x) { return std::sin(x) * std::exp(0.3 * x); };
  const double ref = integrate(f, 0.0, 3.0, 512);
  const double e1 = std::abs(integrate(f, 0.0, 3.0, 41, QuadratureScheme::trapezoid_refined) - ref);
  const double e2 = std::abs(integrate(f, 0.0, 3.0, 81, QuadratureScheme::trapezoid_refined) - ref);
  CHECK(std::log2(e1 / e2) == doctest::Approx(4.0).epsilon(0.05));
}
