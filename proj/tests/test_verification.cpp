#include <doctest.h>

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "hydrogen1d/suite.hpp"
#include "hydrogen1d/verification.hpp"
#include "oracles.hpp"

using namespace hydrogen1d;
using cplx = std::complex<double>;

namespace {
QuantumNumber N(int n) { return QuantumNumber(n); }

const CheckResult& find(const VerificationReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return c;
  FAIL("no check named " << name);
  static CheckResult none;
  return none;
}
}  // namespace

TEST_CASE("property: CheckResult pass rule") {
  oracle::Gen gen(7);
  for (int i = 0; i < 2000; ++i) {
    const double m = gen.log_uniform(1e-18, 1e3), t = gen.log_uniform(1e-18, 1e3);
    const auto c = CheckResult::make("c", m, t);
    CHECK(c.passed == (m <= t));
    const auto lb = CheckResult::at_least("lb", m, t);
    CHECK(lb.passed == (m >= t * (1 - 1e-15)));
    CHECK(lb.tolerance == 1.0);
    CHECK(lb.measured == doctest::Approx(t / m).epsilon(1e-14));
  }
  CHECK_FALSE(CheckResult::make("nan", std::numeric_limits<double>::quiet_NaN(), 1.0).passed);
  CHECK_FALSE(CheckResult::at_least("zero", 0.0, 1.0).passed);
}

TEST_CASE("property: report finalize sorts and aggregates") {
  oracle::Gen gen(11);
  for (int trial = 0; trial < 200; ++trial) {
    VerificationReport r;
    bool all = true;
    const int count = gen.integer(0, 12);
    for (int i = 0; i < count; ++i) {
      const bool pass = gen.uniform(0, 1) < 0.8;
      all = all && pass;
      r.add(CheckResult::make("c" + std::to_string(gen.integer(0, 99)), pass ? 0.0 : 2.0, 1.0));
    }
    r.finalize();
    CHECK(r.all_passed == all);
    for (std::size_t i = 1; i < r.checks.size(); ++i) CHECK(r.checks[i - 1].name <= r.checks[i].name);
  }
  VerificationReport a, b;
  a.add(CheckResult::make("x", 0.0, 1.0));
  b.add(CheckResult::make("y", 3.0, 1.0));
  a.merge(b);
  CHECK(a.checks.size() == 2);
  CHECK_FALSE(a.all_passed);
}

TEST_CASE("QuadratureSpec") {
  QuadratureSpec q;
  CHECK(q.halfwidth_for(3) == doctest::Approx(120.0));
  q.domain_halfwidth = 55.0;
  CHECK(q.halfwidth_for(3) == 55.0);
  q.node_count = 8;
  CHECK_THROWS_AS(q.validate(), std::invalid_argument);
  CHECK(scheme_from_string(to_string(QuadratureScheme::trapezoid_refined)) ==
        QuadratureScheme::trapezoid_refined);
  CHECK(scheme_from_string("gauss-legendre-composite") == QuadratureScheme::gauss_legendre_composite);
  CHECK_THROWS_AS(scheme_from_string("simpson"), std::invalid_argument);
}

TEST_CASE("parseval") {
  const auto c1 = check_parseval(N(1), QuadratureSpec{}, {}, 1e-8);
  CHECK(c1.passed);
  CHECK(c1.name == "parseval[n=1]");
  CHECK(check_parseval(N(5), QuadratureSpec{}).passed);
  QuadratureSpec coarse;
  coarse.node_count = 16;
  CHECK_FALSE(check_parseval(N(5), coarse).passed);
  QuadratureSpec trap;
  trap.scheme = QuadratureScheme::trapezoid_refined;
  trap.node_count = 20000;
  CHECK(check_parseval(N(2), trap).passed);
}

TEST_CASE("parseval: refining never makes things materially worse") {
  for (int n : {1, 3, 6}) {
    double prev = std::numeric_limits<double>::infinity();
    for (int nodes = 64; nodes <= 8192; nodes *= 2) {
      QuadratureSpec q;
      q.node_count = nodes;
      const double err = check_parseval(N(n), q).measured;
      CHECK(err <= 1.1 * prev + 1e-14);
      prev = err;
    }
  }
}

TEST_CASE("orthonormality: refining never makes things materially worse") {
  double prev = std::numeric_limits<double>::infinity();
  for (int nodes = 64; nodes <= 8192; nodes *= 2) {
    QuadratureSpec q;
    q.node_count = nodes;
    const double err = check_orthonormality(4, q).checks.front().measured;
    CHECK(err <= 1.1 * prev + 1e-14);
    prev = err;
  }
}

TEST_CASE("orthonormality") {
  const auto r2 = check_orthonormality(2, QuadratureSpec{});
  CHECK(r2.all_passed);
  REQUIRE(r2.checks.size() == 2);
  QuadratureSpec wide;
  wide.domain_halfwidth = 320.0;
  wide.node_count = 8192;
  CHECK(check_orthonormality(8, wide).all_passed);
}

TEST_CASE("fourier transform of psi") {
  const std::vector<double> k0{0.0};
  CHECK(std::abs(fourier_transform_psi(N(3), k0, QuadratureSpec{})[0]) < 1e-15);
  for (int n : {1, 3}) {
    const auto c = check_fourier_consistency(N(n), default_k_grid(), QuadratureSpec{});
    CHECK(c.passed);
    CHECK(c.name == "fourier[n=" + std::to_string(n) + "]");
  }
  // pointwise, without phase alignment: with psi_n > 0 just right of the
  // origin the transform is (-1)^{n-1} phi_n
  const std::vector<double> ks{0.1, 0.7, 2.5};
  for (int n = 1; n <= 4; ++n) {
    const auto num = fourier_transform_psi(N(n), ks, QuadratureSpec{});
    const double sign = (n % 2) ? 1.0 : -1.0;
    for (std::size_t i = 0; i < ks.size(); ++i) CHECK(std::abs(num[i] - sign * phi(N(n), ks[i])) < 1e-8);
  }
  CHECK_THROWS_AS(check_fourier_consistency(N(1), {}, QuadratureSpec{}), std::invalid_argument);
}

TEST_CASE("schrodinger residual") {
  for (int n = 1; n <= 8; ++n) CHECK(check_schrodinger_residual(N(n), default_residual_grid(n)).passed);
  CHECK_THROWS_AS(check_schrodinger_residual(N(1), {0.0, 1.0}), std::invalid_argument);
}

TEST_CASE("matching: eigenstates pass, other trial functions fail") {
  for (int n = 1; n <= 4; ++n) CHECK(check_matching(N(n), default_epsilons()).all_passed);
  const auto kink = check_matching(even_kink_trial(), 1, default_epsilons());
  CHECK_FALSE(kink.all_passed);
  CHECK(matching_residual(even_kink_trial(), 1, 1e-5) > 0.5);
  CHECK(matching_residual(half_line_trial(N(1), Side::positive), 1, 1e-5) > 1e-2);
}

TEST_CASE("matching: fitted order of a known perturbation") {
  // f = z + z^2 |z|: slope jump 6 eps^2 plus a cubic integral term
  TrialFunction f{"cubic_jump", [](double z) { return z + z * z * std::abs(z); },
                  [](double z) { return 1.0 + 3.0 * z * std::abs(z); }};
  std::vector<double> eps{1e-1, 1e-2, 1e-3}, r;
  for (double e : eps) r.push_back(matching_residual(f, 1, e));
  CHECK(r[0] == doctest::Approx(6e-2 + 2e-3 / 3.0).epsilon(1e-9));
  const auto order = fitted_order(eps, r);
  REQUIRE(order);
  CHECK(*order == doctest::Approx(2.0).epsilon(0.01));
  CHECK(*fitted_order({1e-1, 1e-2}, {1e-2, 1e-4}) == doctest::Approx(2.0));
  CHECK_FALSE(fitted_order({1e-1, 1e-2}, {1e-15, 1e-16}).has_value());
}

TEST_CASE("ground-state candidate is rejected") {
  const auto E = linspace(-50.0, 10.0, 601);
  const auto x = linspace(0.1, 10.0, 100);
  const auto r = groundstate_rejection(E, x);
  CHECK(r.all_passed);
  CHECK(find(r, "groundstate.residual").passed);
  CHECK(find(r, "groundstate.derivative_jump").passed);
  GroundStateCandidate narrow;
  narrow.ell = 0.25;
  CHECK(groundstate_rejection(E, x, narrow).all_passed);
  GroundStateCandidate bad;
  bad.ell = -1.0;
  CHECK_THROWS_AS(bad.amplitude(), std::invalid_argument);
  CHECK(check_no_deep_state().passed);
}

TEST_CASE("semiclassical time ratio") {
  CHECK(turning_point(N(1)) == doctest::Approx(2.0));
  CHECK(turning_point(N(3)) == doctest::Approx(18.0));
  double prev = 0.0;
  for (double d : default_deltas()) {
    const double r = semiclassical_time_ratio(N(2), d);
    CHECK(r > prev);
    prev = r;
  }
  for (int n = 1; n <= 3; ++n) CHECK(check_semiclassical_exponent(N(n), default_deltas()).passed);
  CHECK_THROWS_AS(semiclassical_time_ratio(N(1), 2.0), std::invalid_argument);
  CHECK_THROWS_AS(semiclassical_time_ratio(N(1), 0.0), std::invalid_argument);
}

TEST_CASE("probability current") {
  const auto x = linspace(-10.0, 10.0, 2001);
  const auto s = sample_psi(N(2), x);
  for (const auto& v : probability_current(s).values) CHECK(v == cplx(0.0));

  // (psi_a + i psi_b)/sqrt 2 has j = (psi_a psi_b' - psi_b psi_a') / 2
  const auto grid = symmetric_grid(10.0, 1e-3);
  const auto j = probability_current(superposition_sample(N(1), N(2), grid));
  double worst = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double t = grid[i];
    const double want = 0.5 * (psi(N(1), t) * psi_derivative(N(2), t) - psi(N(2), t) * psi_derivative(N(1), t));
    worst = std::max(worst, std::abs(j.values[i].real() - want));
    CHECK(j.values[i].imag() == 0.0);
  }
  CHECK(worst < 1e-6);
  const auto [lm, lp] = current_limits_at_origin(j);
  CHECK(std::abs(lm - lp) < 1e-8);

  WavefunctionSample two;
  two.abscissae = {0.0, 1.0};
  two.values = {1.0, 2.0};
  CHECK_THROWS_AS(probability_current(two), std::invalid_argument);
  CHECK_THROWS_AS(probability_current(sample_psi(N(1), std::vector<double>{0.0, 1.0, 3.0, 4.0})),
                  std::invalid_argument);
  CHECK(check_current(3).all_passed);
}

TEST_CASE("boundary form checks") {
  CHECK(check_boundary_defect().all_passed);
  CHECK(std::abs(kink_defect_against_ground()) < 1e-6);
  const auto g = symmetric_grid(1.0, 0.25);
  CHECK(g == std::vector<double>{-0.875, -0.625, -0.375, -0.125, 0.125, 0.375, 0.625, 0.875});
}

TEST_CASE("run_suite: reproducible and independent of scheduling") {
  SuiteConfig cfg;
  cfg.n_max = 3;
  const auto par = run_suite(cfg);
  cfg.parallel = false;
  const auto ser = run_suite(cfg);
  REQUIRE(par.checks.size() == ser.checks.size());
  for (std::size_t i = 0; i < par.checks.size(); ++i) {
    CHECK(par.checks[i].name == ser.checks[i].name);
    CHECK(par.checks[i].measured == ser.checks[i].measured);  // bit for bit
    if (i) CHECK(par.checks[i - 1].name <= par.checks[i].name);
  }
  CHECK(par.all_passed);

  SuiteConfig one;
  one.checks = {"parseval"};
  one.n = 3;
  const auto r = run_suite(one);
  REQUIRE(r.checks.size() == 1);
  CHECK(r.checks[0].name == "parseval[n=3]");

  SuiteConfig bad;
  bad.checks = {"nonsense"};
  CHECK_THROWS_AS(run_suite(bad), std::invalid_argument);
  CHECK(suite_families().size() == 9);
}
