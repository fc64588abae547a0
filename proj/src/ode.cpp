#include "hill/ode.hpp"

#include <boost/numeric/odeint.hpp>
#include <cmath>

namespace hill {

namespace ode = boost::numeric::odeint;

namespace {

template <typename State>
auto make_stepper(const OdeOptions& opt) {
  using Stepper = ode::runge_kutta_fehlberg78<State>;
  using Controlled = ode::controlled_runge_kutta<Stepper>;
  return Controlled(ode::default_error_checker<double, ode::range_algebra, ode::default_operations>(opt.abs, opt.rel),
                    ode::default_step_adjuster<double, double>(opt.max_dt), Stepper());
}

}  // namespace

State4 integrate_pair(const std::function<double(double)>& V, cplx z, double sigma, double x_from, double x_to,
                      const State4& y_scaled, const std::vector<double>& obs,
                      const std::function<void(const State4&, double)>& observer, const OdeOptions& opt) {
  const cplx z2 = z * z;
  auto rhs = [&](const State4& s, State4& ds, double x) {
    const double v = V(x);
    ds[0] = s[1] - sigma * s[0];
    ds[1] = (v - z2) * s[0] - sigma * s[1];
    ds[2] = s[3] - sigma * s[2];
    ds[3] = (v - z2) * s[2] - sigma * s[3];
  };

  const double dir = (x_to >= x_from) ? 1.0 : -1.0;
  double dt0 = dir * std::min(opt.max_dt, std::max(1e-6, std::abs(x_to - x_from) / 16.0));
  State4 y = y_scaled;

  // Integration times: observation points plus the final point, in direction order.
  std::vector<double> times;
  times.reserve(obs.size() + 2);
  times.push_back(x_from);
  for (double x : obs) times.push_back(x);
  if (times.back() != x_to) times.push_back(x_to);
  for (std::size_t i = 1; i < times.size(); ++i) {
    if ((times[i] - times[i - 1]) * dir < 0.0) throw numerical_error("integrate_pair: observation times out of order");
  }

  auto stepper = make_stepper<State4>(opt);
  std::size_t idx = 0;
  try {
    ode::integrate_times(stepper, rhs, y, times.begin(), times.end(), dt0, [&](const State4& s, double x) {
      // times = {x_from, obs..., [x_to]}: forward only the obs entries
      if (idx >= 1 && idx <= obs.size() && observer) observer(s, x);
      ++idx;
      y = s;
    });
  } catch (const std::exception& e) {
    throw numerical_error(std::string("ODE integration failed: ") + e.what());
  }
  return y;
}

State8 integrate_pair_dz(const std::function<double(double)>& V, cplx z, double sigma, double x_from, double x_to,
                         const State8& y_scaled, const OdeOptions& opt) {
  const cplx z2 = z * z;
  auto rhs = [&](const State8& s, State8& ds, double x) {
    const double v = V(x);
    ds[0] = s[1] - sigma * s[0];
    ds[1] = (v - z2) * s[0] - sigma * s[1];
    ds[2] = s[3] - sigma * s[2];
    ds[3] = (v - z2) * s[2] - sigma * s[3];
    ds[4] = s[5] - sigma * s[4];
    ds[5] = (v - z2) * s[4] - 2.0 * z * s[0] - sigma * s[5];
    ds[6] = s[7] - sigma * s[6];
    ds[7] = (v - z2) * s[6] - 2.0 * z * s[2] - sigma * s[7];
  };
  const double dir = (x_to >= x_from) ? 1.0 : -1.0;
  double dt0 = dir * std::min(opt.max_dt, std::max(1e-6, std::abs(x_to - x_from) / 16.0));
  State8 y = y_scaled;
  auto stepper = make_stepper<State8>(opt);
  try {
    ode::integrate_adaptive(stepper, rhs, y, x_from, x_to, dt0);
  } catch (const std::exception& e) {
    throw numerical_error(std::string("ODE integration failed: ") + e.what());
  }
  return y;
}

}  // namespace hill
