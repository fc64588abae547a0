#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "hill/ode.hpp"
#include "hill/potential.hpp"
#include "hill/scaled.hpp"
#include "hill/types.hpp"

namespace hill {

// Boundary values of the canonical fundamental system of -y'' + p y = z^2 y
// with theta(0) = phi'(0) = 1, theta'(0) = phi(0) = 0, evaluated at x = 1.
// All entries are carried scaled by e^{-gamma}, gamma = |Im z|.
struct Monodromy {
  cplx z{};
  double gamma = 0.0;
  cplx theta1_s{}, dtheta1_s{}, phi1_s{}, dphi1_s{};

  cplx delta_s() const { return 0.5 * (dphi1_s + theta1_s); }
  cplx beta_s() const { return 0.5 * (dphi1_s - theta1_s); }

  Scaled theta1() const { return {theta1_s, gamma}; }
  Scaled dtheta1() const { return {dtheta1_s, gamma}; }
  Scaled phi1() const { return {phi1_s, gamma}; }
  Scaled dphi1() const { return {dphi1_s, gamma}; }
  Scaled delta() const { return {delta_s(), gamma}; }
  Scaled beta() const { return {beta_s(), gamma}; }

  // theta(1) phi'(1) - theta'(1) phi(1) - 1, relative to e^{2 gamma}.
  double wronskian_residual() const;
  // beta^2 + 1 - Delta^2 + phi(1) theta'(1), relative residual.
  double identity_2_26_residual() const;
};

// Monodromy plus z-derivatives of the four boundary values (same scaling).
struct MonodromyDz {
  Monodromy m;
  cplx dz_theta1_s{}, dz_dtheta1_s{}, dz_phi1_s{}, dz_dphi1_s{};
  cplx dz_delta_s() const { return 0.5 * (dz_dphi1_s + dz_theta1_s); }
  cplx dz_beta_s() const { return 0.5 * (dz_dphi1_s - dz_theta1_s); }
};

Monodromy monodromy(const PeriodicPotential& p, cplx z, const OdeOptions& opt = {});
MonodromyDz monodromy_dz(const PeriodicPotential& p, cplx z, const OdeOptions& opt = {});

// Fundamental pair over [0, X] (X may exceed the period) with observations:
// observer receives the scaled state e^{-gamma x}(theta, theta', phi, phi') at
// each requested x.  Returns the scaled state at X.
State4 floquet_values(const PeriodicPotential& p, cplx z, double X, const std::vector<double>& obs,
                      const std::function<void(const State4&, double)>& observer, const OdeOptions& opt = {});

// Lyapunov function Delta as a function of the energy lambda = z^2 (real
// axis); used for the lowest-eigenvalue normalization.
double lyapunov_energy(const PeriodicPotential& p, double lambda, const OdeOptions& opt = {});

// Lowest periodic eigenvalue E_0^+ (the root of Delta(lambda) = 1 below which
// Delta > 1).
double lowest_periodic_eigenvalue(const PeriodicPotential& p, const OdeOptions& opt = {});

// phi(x, z, tau): solution of -y'' + p(.+tau) y = z^2 y, y(0) = 0, y'(0) = 1,
// assembled from one unshifted solve on [0, x+tau].
cplx shifted_phi(const PeriodicPotential& p, double tau, cplx z, double x, const OdeOptions& opt = {});

// One gap/edge record, in both energy and momentum variables.
struct GapEdges {
  int n = 0;
  double e_minus = 0.0, e_plus = 0.0;  // momentum edges, e = sqrt(E)
  double E_minus = 0.0, E_plus = 0.0;  // energy edges
  bool closed = false;                 // |e_plus - e_minus| below the degenerate threshold
  double width() const { return e_plus - e_minus; }
  double energy_width() const { return E_plus - E_minus; }
};

struct GapAngles {
  int n = 0;
  double c = 0.0, s = 0.0, phi = 0.0;  // (c_n, s_n, phi_n)
};

struct BandStructure {
  std::vector<GapEdges> gaps;      // index n-1 holds gap n
  std::vector<double> dirichlet;   // mu_n, index n-1
  std::vector<double> neumann;     // nu_n, index n-1
  int n_max = 0;

  const GapEdges& gap(int n) const;
  double mu(int n) const;
  double nu(int n) const;

  // Band n is [e_{n-1}^+, e_n^-] with e_0^+ = 0.
  double band_left(int n) const;
  double band_right(int n) const;
  // Locates x > 0: returns (n, true) if x is inside band n, (n, false) if x is
  // inside the closure of gap n.
  std::pair<int, bool> locate(double x) const;
};

// Degenerate (closed) gap threshold in the momentum variable.
inline constexpr double kClosedGapTol = 1e-9;

// Spectral engine for one periodic background: pins E_0^+ = 0 by shifting p,
// and caches band data.  All momentum-variable operations of the project run
// against the normalized potential.
class HillSpectrum {
 public:
  explicit HillSpectrum(PeriodicPotential p_raw, OdeOptions ode = {});

  const PeriodicPotential& raw() const { return raw_; }
  const PeriodicPotential& potential() const { return p_; }  // normalized
  double energy_shift() const { return shift_; }             // E_0^+ of raw
  const OdeOptions& ode() const { return ode_; }
  double norm1() const { return p_.norm1(); }

  Monodromy monodromy(cplx z) const { return hill::monodromy(p_, z, ode_); }
  MonodromyDz monodromy_dz(cplx z) const { return hill::monodromy_dz(p_, z, ode_); }

  const BandStructure& bands(int n_max) const;

  GapAngles gap_angles(int n) const;

  // phi'(1, mu_n), used by the gap-angle sign and by (5.10)-style data.
  double dphi1_at_mu(int n) const;

 private:
  PeriodicPotential raw_, p_;
  double shift_ = 0.0;
  OdeOptions ode_;
  mutable std::mutex mu_;
  mutable BandStructure bands_;

  void extend_bands(int n_max) const;
};

}  // namespace hill
