#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hill/types.hpp"

namespace hill {

// Real 1-periodic background potential.  The Fourier form is canonical; a grid
// of uniform samples on [0,1) is converted at construction by direct
// quadrature of the coefficients.
class PeriodicPotential {
 public:
  PeriodicPotential();  // zero potential

  // coeffs maps n >= 0 to p_n; p_{-n} = conj(p_n) is implied.  p_0 must be
  // real for the potential to be real-valued.
  static PeriodicPotential from_fourier(const std::map<int, cplx>& coeffs);
  // N uniform samples p(j/N), j = 0..N-1.
  static PeriodicPotential from_grid(const std::vector<double>& samples);

  double operator()(double x) const;

  // p_n = \int_0^1 p(x) e^{-i 2 pi n x} dx (exact for the stored series).
  cplx fourier(int n) const;
  int max_harmonic() const { return static_cast<int>(cos_amp_.size()); }

  double mean() const { return p0_; }           // p_0
  double norm1() const { return norm1_; }       // \int_0^1 |p|
  double norm1_over(double t) const;            // \int_0^t |p|, t >= 0
  bool is_zero() const;

  // p - c (constant shift); used to pin the lowest periodic eigenvalue at 0.
  PeriodicPotential shifted(double c) const;

  const std::optional<std::vector<double>>& grid_samples() const { return grid_; }

 private:
  // p(x) = p0 + sum_n (cos_amp[n-1] cos(2 pi n x) + sin_amp[n-1] sin(2 pi n x))
  double p0_ = 0.0;
  std::vector<double> cos_amp_;
  std::vector<double> sin_amp_;
  double norm1_ = 0.0;
  std::optional<std::vector<double>> grid_;  // original samples, if any

  void finish();
};

// Real potential supported on [0, t].
class CompactPotential {
 public:
  CompactPotential();  // zero, t = 1

  // Samples at x = i t/(N-1), i = 0..N-1; cubic Catmull-Rom interpolation.
  static CompactPotential from_grid(double t, const std::vector<double>& samples);
  // q(x) = sum_(n,tau) 2 n^{-alpha} cos(2 pi n x - tau) on (0,1), zero outside.
  static CompactPotential from_cosine_series(double alpha, const std::vector<std::pair<int, double>>& phases);

  double operator()(double x) const;  // 0 outside [0, t]

  double support() const { return t_; }
  double norm1() const { return norm1_; }
  bool is_zero() const;

  // Fourier data of eq-style coefficients: qhat_0, qhat_n = qhat_cn + i qhat_sn
  // with qhat_cn = \int q cos(2 pi n x), qhat_sn = \int q sin(2 pi n x).
  double qhat0() const;
  cplx qhat(int n) const;

  bool is_cosine_series() const { return alpha_.has_value(); }
  double alpha() const { return alpha_.value(); }
  const std::vector<std::pair<int, double>>& phases() const { return phases_; }
  const std::vector<double>& samples() const { return samples_; }

  // Values q(0+), q(1-) of the cosine-series form (the construction is a
  // series on (0,1) extended by zero, so the endpoint jump is a real feature
  // of the object and is reported, not hidden).
  std::pair<double, double> endpoint_values() const;

 private:
  double t_ = 1.0;
  std::vector<double> samples_;                  // grid form
  std::optional<double> alpha_;                  // cosine-series form
  std::vector<std::pair<int, double>> phases_;
  double norm1_ = 0.0;
  mutable std::map<int, cplx> qhat_cache_;

  double eval_grid(double x) const;
  double eval_series(double x) const;
  void compute_norm1();
};

// JSON file formats shared repo-wide:
//   periodic: {"type":"fourier","coeffs":[[n,re,im],...]}
//             {"type":"grid","samples":[...],"period":1.0}
//   compact:  {"type":"grid","t":...,"samples":[...]}
//             {"type":"cosine_series","t":1.0,"alpha":...,"phases":[[n,tau],...]}
PeriodicPotential load_periodic(const std::string& path);
CompactPotential load_compact(const std::string& path);
std::string periodic_to_json(const PeriodicPotential& p);
std::string compact_to_json(const CompactPotential& q);
void save_compact(const CompactPotential& q, const std::string& path);

}  // namespace hill
