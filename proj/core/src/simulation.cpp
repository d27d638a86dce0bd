#include "gmhd/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gmhd/errors.hpp"
#include "gmhd/field_ops.hpp"
#include "gmhd/radius.hpp"

namespace gmhd {

RawSample sample(const MHDState& s, const GevreyParams& p, int sup_refine) {
  RawSample r;
  r.t = s.t;
  r.energy = energy(s);
  r.cross_helicity = cross_helicity(s);
  const SpectralField omega = curl(s.u), j = curl(s.h);
  r.bkm_integrand = sup_norm(omega, sup_refine) + sup_norm(j, sup_refine);
  r.grad_sum = sup_gradient(s.u, sup_refine) + sup_gradient(s.h, sup_refine);
  r.hr_norm = std::hypot(sobolev_norm(omega, p.r), sobolev_norm(j, p.r));
  r.psi = axis_spectrum(omega);
  r.psi.add(j);
  try {
    r.tau_fit = fit_radius(s, p.s);
  } catch (const InvalidArgument&) {
    r.tau_fit = std::numeric_limits<double>::quiet_NaN();
  }
  return r;
}

std::vector<DiagnosticsRecord> radius_columns(const std::vector<RawSample>& raw, const GevreyParams& p,
                                              double C, double C_tilde, double tau0) {
  std::vector<DiagnosticsRecord> out;
  out.reserve(raw.size());
  if (raw.empty()) return out;
  const double x0 = gevrey_norm(raw.front().psi, p.r, tau0, p.s);
  RadiusTracker tracker(C, C_tilde, tau0);
  const double ry = p.r + 0.5 / p.s;
  bool collapsed = false;
  for (const RawSample& r : raw) {
    DiagnosticsRecord d;
    d.t = r.t;
    d.energy = r.energy;
    d.cross_helicity = r.cross_helicity;
    d.bkm_integrand = r.bkm_integrand;
    d.grad_sum = r.grad_sum;
    d.hr_norm = r.hr_norm;
    d.tau_fit = r.tau_fit;
    if (!collapsed) {
      try {
        const auto pt = tracker.push(r.t, r.grad_sum, r.hr_norm, x0);
        d.tau = pt.tau;
        d.tau_lower = pt.lower;
      } catch (const NumericalAbort&) {
        collapsed = true;  // rows from here on carry tau = 0
      }
    }
    d.x_norm = gevrey_norm(r.psi, p.r, d.tau, p.s);
    d.y_norm = gevrey_norm(r.psi, ry, d.tau, p.s);
    out.push_back(d);
  }
  return out;
}

RunResult run(const MHDState& initial, const RunSettings& st, const SampleHook& hook) {
  validate(st.gevrey);
  if (!(st.gevrey.tau > 0.0)) throw InvalidArgument("tau0 must be positive");
  if (!(st.cadence > 0.0)) throw InvalidArgument("cadence must be positive");
  if (!(st.t_end > initial.t)) throw InvalidArgument("t_end must exceed the start time");
  if (!(st.dt > 0.0) && !(st.cfl > 0.0)) throw InvalidArgument("need dt > 0 or cfl > 0");

  RunResult res(initial);
  MHDState s = initial;
  std::vector<RawSample> raw;
  const double t0 = initial.t;
  // Sample times t0 + i*cadence, the last one clipped to t_end.
  const long intervals = std::max(1L, long(std::ceil((st.t_end - t0) / st.cadence - 1e-9)));

  raw.push_back(sample(s, st.gevrey, st.sup_refine));
  const double x0 = gevrey_norm(raw.front().psi, st.gevrey.r, st.gevrey.tau, st.gevrey.s);
  RadiusTracker live(st.C, st.C_tilde, st.gevrey.tau);
  bool live_collapsed = false;
  const auto current_tau = [&]() {
    const RawSample& r = raw.back();
    if (st.fit_C) return std::isfinite(r.tau_fit) ? std::min(st.gevrey.tau, r.tau_fit) : st.gevrey.tau;
    if (live_collapsed) return 0.0;
    try {
      return live.push(r.t, r.grad_sum, r.hr_norm, x0).tau;
    } catch (const NumericalAbort&) {
      live_collapsed = true;
      return 0.0;
    }
  };
  {
    const double tau = current_tau();
    if (hook) hook(s, 0, tau);
  }
  const double bkm0 = raw.front().bkm_integrand;
  try {
    for (long i = 1; i <= intervals; ++i) {
      const double target = i == intervals ? st.t_end : t0 + double(i) * st.cadence;
      const double span = target - s.t;
      const double dt = st.dt > 0.0 ? st.dt : cfl_dt(s, st.cfl);
      const long n_sub = std::isfinite(dt) ? std::max(1L, long(std::ceil(span / dt - 1e-9))) : 1;
      const double h = span / double(n_sub);
      for (long k = 0; k < n_sub; ++k) {
        s = step_rk4(s, h);
        ++res.steps;
      }
      s.t = target;
      raw.push_back(sample(s, st.gevrey, st.sup_refine));
      const double tau = current_tau();
      if (hook) hook(s, raw.size() - 1, tau);
      if (bkm0 > 0.0 && raw.back().bkm_integrand > st.blowup_factor * bkm0) {
        res.status = RunStatus::blowup;
        res.message = "resolution exceeded / possible singularity: |omega|_inf + |J|_inf grew by more than " +
                      std::to_string(st.blowup_factor) + "x at t = " + std::to_string(target);
        break;
      }
    }
  } catch (const NumericalAbort& e) {
    res.status = RunStatus::numerical_abort;
    res.message = e.what();
  }

  res.final_state = s;
  res.tau0 = st.gevrey.tau;
  res.C = st.C;
  if (st.fit_C) {
    if (std::isfinite(raw.front().tau_fit)) res.tau0 = std::min(res.tau0, raw.front().tau_fit);
    if (res.tau0 <= 0.0) throw InvalidArgument("fitted initial radius is zero; cannot calibrate C");
    std::vector<double> t, g, hr, fit;
    for (const auto& r : raw) {
      t.push_back(r.t);
      g.push_back(r.grad_sum);
      hr.push_back(r.hr_norm);
      fit.push_back(r.tau_fit);
    }
    const double x0 = gevrey_norm(raw.front().psi, st.gevrey.r, res.tau0, st.gevrey.s);
    res.C = calibrate_C(t, g, hr, fit, res.tau0, x0);
    // The explicit minorant needs |Psi|^2_{H^r} G^{-1} <= |Psi0|^2_{H^r}, i.e.
    // C >= 2 C_tilde; raising C keeps tau below tau_fit.
    const auto I = cumulative_trapezoid(t, g);
    if (raw.size() >= 10 && I.back() > 0.0) {
      res.C_tilde = estimate_C_tilde(I, hr);
      res.C = std::max(res.C, 2.0 * res.C_tilde);
    }
  }
  if (!st.fit_C) res.C_tilde = st.C_tilde;
  res.records = radius_columns(raw, st.gevrey, res.C, res.C_tilde, res.tau0);
  return res;
}

}  // namespace gmhd
