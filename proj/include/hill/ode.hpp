#pragma once

#include <array>
#include <functional>
#include <vector>

#include "hill/types.hpp"

namespace hill {

struct OdeOptions {
  double rel = 1e-12;   // relative tolerance of the embedded RK controller
  double abs = 1e-14;   // absolute tolerance
  double max_dt = 0.05; // step cap; tightened automatically for wiggly potentials
};

// State layout: (y_a, y_a', y_b, y_b') for the two fundamental solutions.
using State4 = std::array<cplx, 4>;
// Extended with the z-derivatives (dz y_a, dz y_a', dz y_b, dz y_b').
using State8 = std::array<cplx, 8>;

// Integrates y'' = (V(x) - z^2) y for the pair of solutions in `y`, carried in
// the damped frame S(x) = e^{-w(x)} y(x) with w'(x) = sigma (constant).  The
// damping keeps every component O(1) for |Im z| up to the counting radii, so
// the controller's relative error test stays meaningful.
//
// Observations fire at each x in `obs` (must be monotone in the direction of
// integration, endpoints included as needed); `state_exponent` of an observed,
// returned state is the caller's business -- this function only transports the
// scaled frame.  Returns the scaled state at x_to.
State4 integrate_pair(const std::function<double(double)>& V, cplx z, double sigma, double x_from, double x_to,
                      const State4& y_scaled, const std::vector<double>& obs,
                      const std::function<void(const State4&, double)>& observer, const OdeOptions& opt);

// Same with the variational system for dz attached: (dz y)'' = (V - z^2) dz y - 2 z y.
State8 integrate_pair_dz(const std::function<double(double)>& V, cplx z, double sigma, double x_from, double x_to,
                         const State8& y_scaled, const OdeOptions& opt);

}  // namespace hill
