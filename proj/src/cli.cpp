#include "hydrogen1d/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fmt/format.h>
#include <fstream>
#include <iostream>
#include <numbers>

#include "hydrogen1d/serialize.hpp"
#include "hydrogen1d/suite.hpp"

namespace hydrogen1d {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.output_path);
  if (!f) throw UsageError("cannot open output file " + cfg.output_path);
  f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

PhysicalScales scales_of(const RunConfig& cfg) {
  return cfg.si ? PhysicalScales::si() : PhysicalScales::atomic();
}

const char* units_of(const RunConfig& cfg) { return cfg.si ? "si" : "atomic"; }

// Maps library exceptions onto exit codes.
template <class F>
int guarded(F&& body, std::ostream& err) {
  try {
    return body();
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int cmd_spectrum(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded([&] {
    const auto scales = scales_of(cfg);
    if (cfg.analytic) {
      if (cfg.n_max < 1) throw UsageError("--n-max must be >= 1");
      json levels = json::array();
      std::vector<std::vector<std::string>> rows;
      for (int n = 1; n <= cfg.n_max; ++n) {
        const auto st = eigen_state(QuantumNumber(n), scales);
        levels.push_back({{"n", n}, {"energy", number_json(st.energy)}, {"multiplicity", 1},
                          {"parity", to_string(st.parity)}});
        rows.push_back({std::to_string(n), format12(st.energy), "1", to_string(st.parity)});
      }
      if (cfg.output_format == OutputFormat::json)
        emit(cfg, dump({{"mode", "analytic"}, {"units", units_of(cfg)}, {"levels", levels}}), out);
      else
        emit(cfg, csv_table({"n", "energy", "multiplicity", "parity"}, rows), out);
      return 0;
    }
    if (cfg.count < 1) throw UsageError("--count must be >= 1");
    auto result = solve_spectrum(cfg.extension, cfg.grid, cfg.shooting, cfg.count);
    const double unit = scales.energy_unit();
    for (auto& l : result.levels) l.energy *= unit;
    for (auto& l : result.rejected) l.energy *= unit;
    if (cfg.output_format == OutputFormat::json) {
      auto j = to_json(result);
      j["mode"] = "numeric";
      j["units"] = units_of(cfg);
      emit(cfg, dump(j), out);
    } else {
      emit(cfg, to_csv(result), out);
    }
    return 0;
  }, err);
}

int cmd_eval(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded([&] {
    const QuantumNumber n(cfg.n);
    const auto scales = scales_of(cfg);
    const double unit = cfg.space == Space::coordinate ? scales.bohr_radius : 1.0 / scales.bohr_radius;
    const auto [lo, hi] = cfg.range.value_or(std::pair{-10.0 * unit, 10.0 * unit});
    if (cfg.points < 1) throw UsageError("--points must be >= 1");
    if (!(lo < hi) && !(lo == hi && cfg.points == 1))
      throw UsageError(fmt::format("invalid range [{}, {}]", lo, hi));
    const auto grid = linspace(lo, hi, cfg.points);
    const auto s = cfg.space == Space::coordinate ? sample_psi(n, grid, scales) : sample_phi(n, grid, scales);
    if (cfg.output_format == OutputFormat::json) {
      auto j = to_json(s);
      j["n"] = cfg.n;
      j["units"] = units_of(cfg);
      emit(cfg, dump(j), out);
    } else {
      emit(cfg, to_csv(s), out);
    }
    return 0;
  }, err);
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded([&] {
    SuiteConfig sc;
    sc.checks = cfg.checks;
    sc.n = cfg.n_opt;
    sc.n_max = cfg.n_max;
    sc.quad = cfg.quad;
    sc.grid = cfg.grid;
    const auto report = run_suite(sc);
    emit(cfg, cfg.output_format == OutputFormat::json ? dump(to_json(report)) : to_csv(report), out);
    if (!report.all_passed) {
      for (const auto& c : report.checks)
        if (!c.passed) err << "FAILED " << c.name << ": " << format12(c.measured) << " > " << format12(c.tolerance) << "\n";
    }
    return report.all_passed ? 0 : 1;
  }, err);
}

int cmd_current(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded([&] {
    const QuantumNumber n(cfg.n);
    const auto scales = scales_of(cfg);
    const double a0 = scales.bohr_radius;
    const auto [lo, hi] = cfg.range.value_or(std::pair{-10.0 * a0, 10.0 * a0});
    if (cfg.points < 3) throw UsageError("--points must be >= 3");
    if (!(lo < hi)) throw UsageError(fmt::format("invalid range [{}, {}]", lo, hi));
    const auto x = linspace(lo, hi, cfg.points);
    const auto sample = cfg.partner ? superposition_sample(n, QuantumNumber(*cfg.partner), x, scales)
                                    : sample_psi(n, x, scales);
    const auto j = probability_current(sample, scales);
    if (cfg.output_format == OutputFormat::json) {
      auto doc = to_json(j);
      doc["quantity"] = "probability_current";
      doc["states"] = cfg.partner ? json::array({cfg.n, *cfg.partner}) : json::array({cfg.n});
      doc["units"] = units_of(cfg);
      emit(cfg, dump(doc), out);
    } else {
      emit(cfg, to_csv(j), out);
    }
    return 0;
  }, err);
}

int cmd_semiclassical(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded([&] {
    const QuantumNumber n(cfg.n);
    const auto scales = scales_of(cfg);
    if (!(cfg.delta_min > 0.0 && cfg.delta_min <= cfg.delta_max))
      throw UsageError("need 0 < --delta-min <= --delta-max");
    if (cfg.points < 1) throw UsageError("--points must be >= 1");
    const auto deltas = cfg.points == 1 ? std::vector<double>{cfg.delta_min}
                                        : logspace(cfg.delta_min, cfg.delta_max, cfg.points);
    std::vector<double> ratios;
    for (double d : deltas) ratios.push_back(semiclassical_time_ratio(n, d, scales));
    const auto p = fitted_order(deltas, ratios);
    if (cfg.output_format == OutputFormat::json) {
      json rows = json::array();
      for (std::size_t i = 0; i < deltas.size(); ++i)
        rows.push_back({{"delta", number_json(deltas[i])}, {"ratio", number_json(ratios[i])}});
      emit(cfg, dump({{"n", cfg.n}, {"turning_point", number_json(turning_point(n, scales))},
                      {"points", rows}, {"exponent", p ? number_json(*p) : json(nullptr)},
                      {"units", units_of(cfg)}}),
           out);
    } else {
      std::vector<std::vector<std::string>> rows;
      for (std::size_t i = 0; i < deltas.size(); ++i) rows.push_back({format12(deltas[i]), format12(ratios[i])});
      emit(cfg, csv_table({"delta", "ratio"}, rows), out);
    }
    return 0;
  }, err);
}

int cmd_groundstate_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded([&] {
    GroundStateCandidate cand;
    cand.ell = cfg.ell;
    auto report = groundstate_rejection(linspace(-50.0, 10.0, 6001), linspace(0.1, 10.0, 991), cand);
    report.add(check_no_deep_state(cfg.grid));
    report.finalize();
    emit(cfg, cfg.output_format == OutputFormat::json ? dump(to_json(report)) : to_csv(report), out);
    return report.all_passed ? 0 : 1;
  }, err);
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"One-dimensional hydrogen atom: spectra, eigenfunctions and checks", "hydrogen1d"};
  app.set_config("--config", "", "Read options from a TOML/INI file (flags take precedence)");
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--output", cfg.output_path, "Write output to this path instead of stdout");
  app.add_flag("--si", cfg.si, "Report in SI units instead of atomic units");

  double theta = 0.0;
  bool dirichlet = false, numeric = false, raw = false;
  auto* spectrum = app.add_subcommand("spectrum", "Bound-state energies");
  auto* g_analytic = spectrum->add_flag("--analytic", cfg.analytic, "Closed-form energies");
  spectrum->add_flag("--numeric", numeric, "Shooting solver (default)")->excludes(g_analytic);
  auto* o_theta = spectrum->add_option("--theta", theta, "Rotation angle of the interface matrix");
  spectrum->add_flag("--dirichlet", dirichlet, "Decoupled half-lines with phi(0) = 0")->excludes(o_theta);
  spectrum->add_option("--count", cfg.count, "Number of levels");
  spectrum->add_option("--n-max", cfg.n_max, "Highest n for --analytic");
  spectrum->add_option("--halfwidth-L", cfg.grid.halfwidth_L, "Domain half-width (a0)");
  spectrum->add_option("--epsilon", cfg.grid.epsilon, "Origin exclusion (a0)");
  spectrum->add_option("--step", cfg.grid.step, "Finest step (a0)");
  spectrum->add_option("--max-step", cfg.grid.max_step, "Coarsest step (a0)");
  spectrum->add_flag("--raw-boundary", raw, "Use the values at +-epsilon instead of their limits");
  spectrum->add_option("--e-lo", cfg.shooting.e_lo, "Lower end of the energy bracket (Hartree)");
  spectrum->add_option("--e-hi", cfg.shooting.e_hi, "Upper end of the energy bracket (Hartree)");
  spectrum->add_option("--points-per-decade", cfg.shooting.points_per_decade, "Scan density");
  spectrum->add_option("--bisection-tol", cfg.shooting.bisection_tol, "Energy tolerance");
  spectrum->add_option("--degeneracy-tol", cfg.shooting.degeneracy_tol, "Merge distance for degenerate roots");

  std::string space = "x";
  std::vector<double> range;
  auto* eval = app.add_subcommand("eval", "Sample psi_n(x) or phi_n(k)");
  eval->add_option("--n", cfg.n, "Principal quantum number");
  eval->add_option("--space", space, "x or k")->check(CLI::IsMember({"x", "k"}));
  eval->add_option("--range", range, "Interval endpoints")->expected(2);
  eval->add_option("--points", cfg.points, "Number of samples");

  int n_single = 0;
  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  verify->add_option("--check", cfg.checks, "Check family (repeatable)")
      ->check(CLI::IsMember(suite_families()));
  auto* o_vn = verify->add_option("--n", n_single, "Single quantum number");
  verify->add_option("--n-max", cfg.n_max, "Highest n checked");
  verify->add_option("--quad-points", cfg.quad.node_count, "Quadrature nodes");
  double halfwidth = 0.0;
  auto* o_hw = verify->add_option("--halfwidth", halfwidth, "Quadrature half-width (a0)");
  std::string scheme = "gauss-legendre-composite";
  verify->add_option("--scheme", scheme, "Quadrature scheme")
      ->check(CLI::IsMember({"gauss-legendre-composite", "trapezoid-refined"}));

  int partner = 0;
  auto* current = app.add_subcommand("current", "Probability current of psi_n or (psi_n + i psi_m)/sqrt 2");
  current->add_option("--n", cfg.n, "First state");
  auto* o_m = current->add_option("--m", partner, "Second state of the superposition");
  current->add_option("--range", range, "Interval endpoints")->expected(2);
  current->add_option("--points", cfg.points, "Uniform grid size");

  auto* semi = app.add_subcommand("semiclassical", "Time ratio near the origin");
  semi->add_option("--n", cfg.n, "Principal quantum number");
  semi->add_option("--delta-min", cfg.delta_min, "Smallest interval width");
  semi->add_option("--delta-max", cfg.delta_max, "Largest interval width");
  int semi_points = 13;
  semi->add_option("--points", semi_points, "Number of widths (log spaced)");

  auto* ground = app.add_subcommand("groundstate-check", "Reject the infinitely bound even state");
  ground->add_option("--ell", cfg.ell, "Length scale of the candidate e^{-|x|/ell}");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  cfg.output_format = format == "csv" ? OutputFormat::csv : OutputFormat::json;
  if (range.size() == 2) cfg.range = std::pair{range[0], range[1]};
  try {
    cfg.extension = dirichlet ? ExtensionParams::dirichlet() : ExtensionParams::rotation(theta);
    if (raw) cfg.grid.value_mode = BoundaryValueMode::raw;
    cfg.space = space_from_string(space);
    if (*o_vn) cfg.n_opt = n_single;
    if (*o_hw) cfg.quad.domain_halfwidth = halfwidth;
    cfg.quad.scheme = scheme_from_string(scheme);
    if (*o_m) cfg.partner = partner;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (spectrum->parsed()) return cmd_spectrum(cfg, out, err);
  if (eval->parsed()) return cmd_eval(cfg, out, err);
  if (verify->parsed()) return cmd_verify(cfg, out, err);
  if (current->parsed()) return cmd_current(cfg, out, err);
  if (semi->parsed()) {
    cfg.points = semi_points;
    return cmd_semiclassical(cfg, out, err);
  }
  return cmd_groundstate_check(cfg, out, err);
}

}  // namespace hydrogen1d
