#include <cmath>

#include "gmhd/errors.hpp"
#include "gmhd/lab.hpp"
#include "gmhd/solver.hpp"

namespace gmhd {

namespace {

MultiplierSpec at_tau(const MultiplierSpec& spec, double tau) { return {spec.m, spec.r, tau, spec.s}; }

double half_weighted(const MHDState& s, const MultiplierSpec& spec) {
  const double a = multiplier_norm(curl(s.u), spec);
  const double b = multiplier_norm(curl(s.h), spec);
  return 0.5 * (a * a + b * b);
}

}  // namespace

BalanceReport energy_balance_check(const MHDState& s0, const MultiplierSpec& spec, double dt, double tau_dot) {
  validate(spec);
  if (spec.m < 1) throw InvalidArgument("energy balance needs a single axis m = 1..3");
  if (!(dt > 0.0)) throw InvalidArgument("energy balance needs dt > 0");
  const MHDState s1 = step_rk4(s0, dt);
  const MHDState s2 = step_rk4(s1, dt);
  const double t1 = s1.t;
  const auto spec_at = [&](double t) {
    const double tau = spec.tau + tau_dot * (t - t1);
    if (tau < 0.0) throw InvalidArgument("radius turns negative inside the balance window");
    return at_tau(spec, tau);
  };

  BalanceReport rep;
  rep.dt = dt;
  rep.fd_derivative = (half_weighted(s2, spec_at(s2.t)) - half_weighted(s0, spec_at(s0.t))) / (s2.t - s0.t);

  const SpectralField w = curl(s1.u);
  const SpectralField j = curl(s1.h);
  const SpectralField ww = lambda_apply(lambda_apply(w, spec), spec);
  const SpectralField wj = lambda_apply(lambda_apply(j, spec), spec);
  const auto ip = [](const SpectralField& a, const SpectralField& b) { return inner(a, b).real(); };

  const MultiplierSpec y{spec.m, spec.r + 1.0 / (2.0 * spec.s), spec.tau, spec.s};
  const double yw = multiplier_norm(w, y), yj = multiplier_norm(j, y);
  rep.tau_term = tau_dot * (yw * yw + yj * yj);

  const SpectralField& u = s1.u;
  const SpectralField& h = s1.h;
  rep.k1 = -ip(advect(u, w) - advect(w, u), ww) - ip(advect(u, j) + advect(j, u), wj);
  rep.k2 = ip(advect(h, j), ww) + ip(advect(h, w), wj);
  rep.k3 = -ip(advect(j, h), ww) + ip(advect(w, h), wj);
  rep.k_corr = ip(rhs_curl(s1).dj - literal_current_tendency(s1), wj);

  const double literal = rep.tau_term + rep.k1 + rep.k2 + rep.k3;
  rep.literal_defect = std::abs(rep.fd_derivative - literal);
  rep.defect = std::abs(rep.fd_derivative - (literal + rep.k_corr));
  return rep;
}

BalanceConvergence energy_balance_convergence(const MHDState& s0, const MultiplierSpec& spec,
                                              const std::vector<double>& dts, double tau_dot) {
  if (dts.size() < 2) throw InvalidArgument("convergence needs at least two step sizes");
  for (std::size_t i = 1; i < dts.size(); ++i) {
    if (!(dts[i] < dts[i - 1])) throw InvalidArgument("step sizes must be strictly decreasing");
  }
  BalanceConvergence out;
  for (double dt : dts) out.steps.push_back(energy_balance_check(s0, spec, dt, tau_dot));
  out.min_order = INFINITY;
  for (std::size_t i = 1; i < dts.size(); ++i) {
    const double p = std::log(out.steps[i - 1].defect / out.steps[i].defect) / std::log(dts[i - 1] / dts[i]);
    out.orders.push_back(p);
    out.min_order = std::min(out.min_order, std::isfinite(p) ? p : -INFINITY);
  }
  out.asymptotic = out.min_order >= 1.9;
  return out;
}

}  // namespace gmhd
