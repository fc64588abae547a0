#pragma once

#include <cstddef>
#include <vector>

namespace hill {

// Gauss-Legendre rule on [-1, 1].  Nodes/weights are generated by Newton
// iteration on the Legendre polynomial, so no tabulated constants are needed.
struct GaussRule {
  std::vector<double> x;
  std::vector<double> w;
};

const GaussRule& gauss_legendre(int n);

// Composite rule: `panels` equal panels of an n-point rule over [a, b].
// Returns the flat node/weight lists in increasing node order.
GaussRule composite_gauss(int n, int panels, double a, double b);

template <typename F>
double integrate_gauss(const GaussRule& rule, F&& f) {
  double s = 0.0;
  for (std::size_t i = 0; i < rule.x.size(); ++i) s += rule.w[i] * f(rule.x[i]);
  return s;
}

}  // namespace hill
