#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace hydrogen1d {

enum class QuadratureScheme { gauss_legendre_composite, trapezoid_refined };

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Cached n-point rule; safe for concurrent callers.
const GaussLegendreRule& gauss_legendre(int n);

/// Panels of the composite Gauss-Legendre rule for a given total node count.
/// Each panel has at most 64 nodes.
struct PanelLayout {
  int panels;
  int nodes_per_panel;
};
PanelLayout panel_layout(int node_count);

/// Integrates f over [a, b] using node_count function evaluations.
/// Works for any f whose result supports + and scalar *.
template <class F>
auto integrate(F&& f, double a, double b, int node_count,
               QuadratureScheme scheme = QuadratureScheme::gauss_legendre_composite) {
  using T = decltype(f(a));
  if (node_count < 2) throw std::invalid_argument("integrate: node_count must be >= 2");
  T total{};
  if (scheme == QuadratureScheme::gauss_legendre_composite) {
    const auto layout = panel_layout(node_count);
    const auto& rule = gauss_legendre(layout.nodes_per_panel);
    const double width = (b - a) / layout.panels;
    for (int p = 0; p < layout.panels; ++p) {
      const double lo = a + p * width;
      const double mid = lo + 0.5 * width;
      T panel{};
      for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        panel += rule.weights[i] * f(mid + 0.5 * width * rule.nodes[i]);
      total += 0.5 * width * panel;
    }
    return total;
  }
  // Trapezoid on node_count points, refined by one Richardson step against
  // the rule at half resolution (Simpson's rule when intervals are even).
  const int intervals = std::max(2, (node_count - 1) / 2 * 2);
  const double h = (b - a) / intervals;
  T fine = 0.5 * (f(a) + f(b));
  T coarse = fine;
  for (int i = 1; i < intervals; ++i) {
    const T v = f(a + i * h);
    fine += v;
    if (i % 2 == 0) coarse += v;
  }
  fine = h * fine;
  coarse = (2.0 * h) * coarse;
  return fine + (1.0 / 3.0) * (fine + (-1.0) * coarse);
}

}  // namespace hydrogen1d
