#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hydrogen1d/verification.hpp"

namespace hydrogen1d {

/// Check families understood by run_suite, in their canonical order.
const std::vector<std::string>& suite_families();

struct SuiteConfig {
  /// Families to run; empty runs all of them.
  std::vector<std::string> checks;
  /// Single quantum number; when unset each per-n family runs n = 1..n_max.
  std::optional<int> n;
  int n_max = 5;
  QuadratureSpec quad;
  GridSpec grid;
  bool parallel = true;

  void validate() const;
};

/// Runs the selected families (concurrently if asked) and returns the
/// checks sorted by name.
VerificationReport run_suite(const SuiteConfig& cfg);

// Grids used by the suite.
std::vector<double> default_k_grid(const PhysicalScales& scales = {});
/// +-[1e-3, 40 n] a0, log spaced, `per_side` points on each half-line.
std::vector<double> default_residual_grid(int n, int per_side = 400,
                                          const PhysicalScales& scales = {});
std::vector<double> default_epsilons();
std::vector<double> default_deltas(const PhysicalScales& scales = {});
std::vector<double> logspace(double lo, double hi, int points);

}  // namespace hydrogen1d
