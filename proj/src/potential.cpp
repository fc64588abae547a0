#include "hill/potential.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "hill/quadrature.hpp"
#include "json.hpp"

namespace hill {

PeriodicPotential::PeriodicPotential() { finish(); }

PeriodicPotential PeriodicPotential::from_fourier(const std::map<int, cplx>& coeffs) {
  // Merge n and -n entries; enforce the reality constraint p_{-n} = conj(p_n).
  std::map<int, cplx> pos;
  for (const auto& [n, c] : coeffs) {
    int m = std::abs(n);
    cplx v = (n >= 0) ? c : std::conj(c);
    auto it = pos.find(m);
    if (it == pos.end()) {
      pos[m] = v;
    } else if (std::abs(it->second - v) > 1e-12 * (1.0 + std::abs(v))) {
      throw input_error("fourier coefficients violate p_{-n} = conj(p_n) at n = " + std::to_string(m));
    }
  }
  PeriodicPotential p;
  if (pos.count(0)) {
    if (std::abs(pos[0].imag()) > 1e-12 * (1.0 + std::abs(pos[0])))
      throw input_error("p_0 must be real for a real potential");
    p.p0_ = pos[0].real();
  }
  int nmax = pos.empty() ? 0 : pos.rbegin()->first;
  p.cos_amp_.assign(nmax, 0.0);
  p.sin_amp_.assign(nmax, 0.0);
  for (const auto& [n, c] : pos) {
    if (n == 0) continue;
    // p_n = p_cn - i p_sn  =>  contribution 2 p_cn cos + 2 p_sn sin
    p.cos_amp_[n - 1] = 2.0 * c.real();
    p.sin_amp_[n - 1] = -2.0 * c.imag();
  }
  p.finish();
  return p;
}

PeriodicPotential PeriodicPotential::from_grid(const std::vector<double>& samples) {
  if (samples.size() < 4) throw input_error("periodic grid needs at least 4 samples");
  const int N = static_cast<int>(samples.size());
  // Direct quadrature of the coefficients on the uniform grid (exact DFT).
  int nmax = (N - 1) / 2;
  std::map<int, cplx> coeffs;
  for (int n = 0; n <= nmax; ++n) {
    cplx s{0.0, 0.0};
    for (int j = 0; j < N; ++j) {
      double ph = -2.0 * pi * n * j / N;
      s += samples[j] * cplx(std::cos(ph), std::sin(ph));
    }
    coeffs[n] = s / static_cast<double>(N);
  }
  PeriodicPotential p = from_fourier(coeffs);
  p.grid_ = samples;
  return p;
}

void PeriodicPotential::finish() {
  // \int_0^1 |p| by composite quadrature; |p| has kinks at zero crossings so a
  // moderately fine panel count is used.
  GaussRule r = composite_gauss(8, 64, 0.0, 1.0);
  double s = 0.0;
  for (std::size_t i = 0; i < r.x.size(); ++i) s += r.w[i] * std::abs((*this)(r.x[i]));
  norm1_ = s;
}

double PeriodicPotential::operator()(double x) const {
  // Rotation recurrence over harmonics: one sin/cos evaluation per call.
  double v = p0_;
  if (cos_amp_.empty()) return v;
  double c1 = std::cos(2.0 * pi * x), s1 = std::sin(2.0 * pi * x);
  double c = c1, s = s1;
  for (std::size_t n = 0; n < cos_amp_.size(); ++n) {
    v += cos_amp_[n] * c + sin_amp_[n] * s;
    double c2 = c * c1 - s * s1;
    s = s * c1 + c * s1;
    c = c2;
  }
  return v;
}

cplx PeriodicPotential::fourier(int n) const {
  int m = std::abs(n);
  if (m == 0) return {p0_, 0.0};
  if (m > static_cast<int>(cos_amp_.size())) return {0.0, 0.0};
  cplx pn{0.5 * cos_amp_[m - 1], -0.5 * sin_amp_[m - 1]};
  return (n > 0) ? pn : std::conj(pn);
}

double PeriodicPotential::norm1_over(double t) const {
  if (t <= 0.0) return 0.0;
  int whole = static_cast<int>(std::floor(t));
  double frac = t - whole;
  double s = whole * norm1_;
  if (frac > 0.0) {
    GaussRule r = composite_gauss(8, std::max(8, static_cast<int>(64 * frac)), 0.0, frac);
    for (std::size_t i = 0; i < r.x.size(); ++i) s += r.w[i] * std::abs((*this)(r.x[i]));
  }
  return s;
}

bool PeriodicPotential::is_zero() const {
  if (p0_ != 0.0) return false;
  for (double a : cos_amp_)
    if (a != 0.0) return false;
  for (double a : sin_amp_)
    if (a != 0.0) return false;
  return true;
}

PeriodicPotential PeriodicPotential::shifted(double c) const {
  PeriodicPotential p = *this;
  p.p0_ -= c;
  p.grid_.reset();
  p.finish();
  return p;
}

// ---------------------------------------------------------------------------

CompactPotential::CompactPotential() { compute_norm1(); }

CompactPotential CompactPotential::from_grid(double t, const std::vector<double>& samples) {
  if (t <= 0.0) throw input_error("compact potential support t must be positive");
  if (samples.size() < 4) throw input_error("compact grid needs at least 4 samples");
  CompactPotential q;
  q.t_ = t;
  q.samples_ = samples;
  q.compute_norm1();
  return q;
}

CompactPotential CompactPotential::from_cosine_series(double alpha, const std::vector<std::pair<int, double>>& phases) {
  CompactPotential q;
  q.t_ = 1.0;
  q.alpha_ = alpha;
  q.phases_ = phases;
  for (const auto& [n, tau] : phases) {
    (void)tau;
    if (n < 1) throw input_error("cosine series indices must be >= 1");
  }
  q.compute_norm1();
  return q;
}

double CompactPotential::operator()(double x) const {
  if (x < 0.0 || x > t_) return 0.0;
  if (alpha_) return eval_series(x);
  if (samples_.empty()) return 0.0;
  return eval_grid(x);
}

double CompactPotential::eval_grid(double x) const {
  const int N = static_cast<int>(samples_.size());
  double h = t_ / (N - 1);
  double u = x / h;
  int i = std::clamp(static_cast<int>(std::floor(u)), 0, N - 2);
  double f = u - i;
  // Catmull-Rom with one-sided stencils at the ends.
  double ym = (i > 0) ? samples_[i - 1] : 3.0 * samples_[0] - 3.0 * samples_[1] + samples_[2];
  double y0 = samples_[i];
  double y1 = samples_[i + 1];
  double y2 = (i + 2 < N) ? samples_[i + 2] : 3.0 * samples_[N - 1] - 3.0 * samples_[N - 2] + samples_[N - 3];
  double a0 = -0.5 * ym + 1.5 * y0 - 1.5 * y1 + 0.5 * y2;
  double a1 = ym - 2.5 * y0 + 2.0 * y1 - 0.5 * y2;
  double a2 = 0.5 * (y1 - ym);
  return ((a0 * f + a1) * f + a2) * f + y0;
}

double CompactPotential::eval_series(double x) const {
  double v = 0.0;
  for (const auto& [n, tau] : phases_) v += 2.0 * std::pow(n, -*alpha_) * std::cos(2.0 * pi * n * x - tau);
  return v;
}

void CompactPotential::compute_norm1() {
  int panels = alpha_ ? std::max<int>(64, 4 * static_cast<int>(phases_.size())) : std::max<int>(16, static_cast<int>(samples_.size() / 2));
  GaussRule r = composite_gauss(8, panels, 0.0, t_);
  double s = 0.0;
  for (std::size_t i = 0; i < r.x.size(); ++i) s += r.w[i] * std::abs((*this)(r.x[i]));
  norm1_ = s;
}

bool CompactPotential::is_zero() const {
  if (alpha_) return phases_.empty();
  for (double v : samples_)
    if (v != 0.0) return false;
  return true;
}

double CompactPotential::qhat0() const { return qhat(0).real(); }

cplx CompactPotential::qhat(int n) const {
  auto it = qhat_cache_.find(n);
  if (it != qhat_cache_.end()) return it->second;
  cplx out;
  if (alpha_ && n >= 1) {
    // exact: qhat_n = n^{-alpha} e^{i tau_n} for listed n
    out = {0.0, 0.0};
    for (const auto& [m, tau] : phases_)
      if (m == n) out += std::pow(n, -*alpha_) * cplx(std::cos(tau), std::sin(tau));
  } else if (alpha_ && n == 0) {
    out = {0.0, 0.0};  // the series has no constant term
  } else {
    int panels = std::max<int>(32, static_cast<int>(std::ceil(2.0 * n * t_)) + 8);
    GaussRule r = composite_gauss(16, panels, 0.0, t_);
    double sc = 0.0, ss = 0.0;
    for (std::size_t i = 0; i < r.x.size(); ++i) {
      double qv = (*this)(r.x[i]);
      sc += r.w[i] * qv * std::cos(2.0 * pi * n * r.x[i]);
      ss += r.w[i] * qv * std::sin(2.0 * pi * n * r.x[i]);
    }
    out = {sc, ss};
  }
  qhat_cache_[n] = out;
  return out;
}

std::pair<double, double> CompactPotential::endpoint_values() const {
  return {(*this)(0.0), (*this)(t_ > 1.0 ? t_ : t_ - 1e-15)};
}

// --------------------------- JSON I/O --------------------------------------

using json = nlohmann::json;

static json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open potential file: " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw input_error("parse error in " + path + ": " + e.what());
  }
  return j;
}

PeriodicPotential load_periodic(const std::string& path) {
  json j = parse_file(path);
  try {
    std::string type = j.at("type").get<std::string>();
    if (type == "fourier") {
      std::map<int, cplx> coeffs;
      for (const auto& row : j.at("coeffs")) {
        int n = row.at(0).get<int>();
        coeffs[n] = cplx(row.at(1).get<double>(), row.size() > 2 ? row.at(2).get<double>() : 0.0);
      }
      return PeriodicPotential::from_fourier(coeffs);
    }
    if (type == "grid") {
      double period = j.value("period", 1.0);
      if (std::abs(period - 1.0) > 1e-14) throw input_error("periodic potential must have period 1");
      return PeriodicPotential::from_grid(j.at("samples").get<std::vector<double>>());
    }
    throw input_error("unknown periodic potential type: " + type);
  } catch (const json::exception& e) {
    throw input_error("bad periodic potential file " + path + ": " + e.what());
  }
}

CompactPotential load_compact(const std::string& path) {
  json j = parse_file(path);
  try {
    std::string type = j.at("type").get<std::string>();
    if (type == "grid") {
      return CompactPotential::from_grid(j.at("t").get<double>(), j.at("samples").get<std::vector<double>>());
    }
    if (type == "cosine_series") {
      double t = j.value("t", 1.0);
      if (std::abs(t - 1.0) > 1e-14) throw input_error("cosine_series potentials have t = 1");
      std::vector<std::pair<int, double>> phases;
      for (const auto& row : j.at("phases")) phases.emplace_back(row.at(0).get<int>(), row.at(1).get<double>());
      return CompactPotential::from_cosine_series(j.at("alpha").get<double>(), phases);
    }
    throw input_error("unknown compact potential type: " + type);
  } catch (const json::exception& e) {
    throw input_error("bad compact potential file " + path + ": " + e.what());
  }
}

std::string periodic_to_json(const PeriodicPotential& p) {
  json j;
  if (p.grid_samples()) {
    j["type"] = "grid";
    j["samples"] = *p.grid_samples();
    j["period"] = 1.0;
  } else {
    j["type"] = "fourier";
    json coeffs = json::array();
    for (int n = 0; n <= p.max_harmonic(); ++n) {
      cplx c = p.fourier(n);
      if (n == 0 || std::abs(c) > 0.0) coeffs.push_back({n, c.real(), c.imag()});
    }
    j["coeffs"] = coeffs;
  }
  return j.dump(2);
}

std::string compact_to_json(const CompactPotential& q) {
  json j;
  if (q.is_cosine_series()) {
    j["type"] = "cosine_series";
    j["t"] = 1.0;
    j["alpha"] = q.alpha();
    json phases = json::array();
    for (const auto& [n, tau] : q.phases()) phases.push_back({n, tau});
    j["phases"] = phases;
  } else {
    j["type"] = "grid";
    j["t"] = q.support();
    j["samples"] = q.samples();
  }
  return j.dump(2);
}

void save_compact(const CompactPotential& q, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot write " + path);
  out << compact_to_json(q) << "\n";
}

}  // namespace hill
