#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hydrogen1d/extension_solver.hpp"
#include "hydrogen1d/verification.hpp"

namespace hydrogen1d {

enum class OutputFormat { json, csv };

struct RunConfig {
  std::string command;
  int n = 1;
  std::optional<int> n_opt;  // verify: single n
  int n_max = 5;
  int count = 4;
  /// spectrum: closed form instead of the shooting solver.
  bool analytic = false;
  ExtensionParams extension;
  GridSpec grid;
  ShootingConfig shooting;
  QuadratureSpec quad;
  std::vector<std::string> checks;
  OutputFormat output_format = OutputFormat::json;
  std::string output_path;  // empty: stdout
  bool si = false;
  // eval / current
  Space space = Space::coordinate;
  std::optional<std::pair<double, double>> range;
  int points = 201;
  std::optional<int> partner;  // current: second state of the superposition
  // semiclassical
  double delta_min = 1e-4;
  double delta_max = 1e-1;
  // groundstate-check
  double ell = 1.0;
};

/// Exit codes: 0 success, 1 computational or check failure, 2 usage error.
int cmd_spectrum(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_eval(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_current(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_semiclassical(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_groundstate_check(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to the subcommand.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hydrogen1d
