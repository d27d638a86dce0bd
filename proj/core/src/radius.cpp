#include "gmhd/radius.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gmhd/errors.hpp"

namespace gmhd {
namespace {

void require_same_length(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw InvalidArgument(std::string(what) + ": series lengths differ");
}

// RK4 over [t0, t1] with coefficients linear in time.  Substeps are capped
// by h_max and by the stability limit of the local Jacobian a + 2 b tau,
// which matters when b tau is large (large H^r norms).
double advance(double tau, double t0, double t1, double a0, double a1, double b0, double b1,
               double h_max) {
  const double span = t1 - t0;
  if (span <= 0.0) return tau;
  const auto coeff = [&](double s, double c0, double c1) { return c0 + (c1 - c0) * (s / span); };
  const auto f = [&](double s, double x) { return radius_rhs(x, coeff(s, a0, a1), coeff(s, b0, b1)); };
  const int base = std::max(1, int(std::ceil(span / h_max - 1e-9)));
  const double h_base = span / base;
  double s = 0.0;
  while (s < span) {
    const double stiff = std::max(a0, a1) + 2.0 * std::max(b0, b1) * tau;
    double h = std::min(h_base, stiff > 0.0 ? 0.5 / stiff : h_base);
    if (s + h > span * (1 - 1e-12)) h = span - s;
    const double k1 = f(s, tau);
    const double k2 = f(s + h / 2, tau + h / 2 * k1);
    const double k3 = f(s + h / 2, tau + h / 2 * k2);
    const double k4 = f(s + h, tau + h * k3);
    tau += h / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
    s += h;
    if (!(tau > 1e-300)) {
      throw NumericalAbort("radius collapse at t = " + std::to_string(t0 + s));
    }
  }
  return tau;
}

}  // namespace

double radius_rhs(double tau, double a, double b) {
  if (a < 0.0 || b < 0.0) throw InvalidArgument("radius coefficients must be nonnegative");
  return -(a * tau + b * tau * tau);
}

double bernoulli_radius(double tau0, double a, double b, double t) {
  if (a < 0.0 || b < 0.0) throw InvalidArgument("radius coefficients must be nonnegative");
  if (a == 0.0) return tau0 / (1.0 + b * tau0 * t);
  const double e = std::exp(-a * t);
  return a * tau0 * e / (a + b * tau0 * (1.0 - e));
}

std::vector<double> integrate_radius(const std::vector<double>& times, const std::vector<double>& a,
                                     const std::vector<double>& b, double tau0, double h_max) {
  require_same_length(times.size(), a.size(), "integrate_radius");
  require_same_length(times.size(), b.size(), "integrate_radius");
  if (!(tau0 > 0.0)) throw InvalidArgument("tau0 must be positive");
  std::vector<double> tau(times.size());
  if (times.empty()) return tau;
  tau[0] = tau0;
  for (std::size_t i = 1; i < times.size(); ++i)
    tau[i] = advance(tau[i - 1], times[i - 1], times[i], a[i - 1], a[i], b[i - 1], b[i], h_max);
  return tau;
}

std::vector<double> cumulative_trapezoid(const std::vector<double>& times, const std::vector<double>& f) {
  require_same_length(times.size(), f.size(), "cumulative_trapezoid");
  std::vector<double> out(times.size(), 0.0);
  for (std::size_t i = 1; i < times.size(); ++i)
    out[i] = out[i - 1] + 0.5 * (times[i] - times[i - 1]) * (f[i] + f[i - 1]);
  return out;
}

RadiusModel make_radius_model(double C, double C_tilde, double tau0, double hr0, double x0,
                              bool halved) {
  if (!(C > 0.0)) throw InvalidArgument("radius constant C must be positive");
  if (!(tau0 > 0.0)) throw InvalidArgument("tau0 must be positive");
  RadiusModel m;
  m.C = C;
  m.C_tilde = C_tilde;
  m.tau0 = tau0;
  m.C0 = C * (hr0 + x0);
  m.C1 = C * C * (1.0 + tau0) * hr0 * hr0 * (halved ? 0.5 : 1.0);
  return m;
}

double radius_lower_bound(double t, double I, const RadiusModel& m) {
  return std::exp(-m.C * I) / (1.0 / m.tau0 + m.C0 * t + 0.5 * m.C1 * t * t);
}

double hr_growth_bound(double I, double C_tilde, double hr0) { return hr0 * std::exp(C_tilde * I); }

double gronwall_factor(double C, double I) { return std::exp(C * I); }

double estimate_C_tilde(const std::vector<double>& I, const std::vector<double>& hr) {
  require_same_length(I.size(), hr.size(), "estimate_C_tilde");
  if (I.size() < 10) throw InvalidArgument("estimate_C_tilde needs at least 10 samples");
  const double hr0 = hr.front();
  double best = 0.0;
  for (std::size_t i = 1; i < I.size(); ++i) {
    const double ratio = std::log(hr[i] / hr0);
    if (I[i] <= 0.0) {
      if (ratio > 1e-12) throw InvalidArgument("unbounded constant: H^r norm grows while I(t) = 0");
      continue;
    }
    best = std::max(best, ratio / I[i]);
  }
  return best;
}

std::vector<double> gronwall_majorant(const std::vector<double>& times, const std::vector<double>& I,
                                      const std::vector<double>& hr, double x0, double C, double tau0) {
  require_same_length(times.size(), I.size(), "gronwall_majorant");
  require_same_length(times.size(), hr.size(), "gronwall_majorant");
  std::vector<double> f(times.size());
  for (std::size_t i = 0; i < times.size(); ++i) f[i] = hr[i] * hr[i] / gronwall_factor(C, I[i]);
  const auto J = cumulative_trapezoid(times, f);
  std::vector<double> M(times.size());
  for (std::size_t i = 0; i < times.size(); ++i)
    M[i] = gronwall_factor(C, I[i]) * (x0 + C * (1.0 + tau0) * J[i]);
  return M;
}

std::vector<double> closed_form_radius(const std::vector<double>& times, const std::vector<double>& I,
                                       const std::vector<double>& hr, const std::vector<double>& M,
                                       double C, double tau0) {
  require_same_length(times.size(), I.size(), "closed_form_radius");
  require_same_length(times.size(), hr.size(), "closed_form_radius");
  require_same_length(times.size(), M.size(), "closed_form_radius");
  std::vector<double> f(times.size());
  for (std::size_t i = 0; i < times.size(); ++i) f[i] = (hr[i] + M[i]) / gronwall_factor(C, I[i]);
  const auto K = cumulative_trapezoid(times, f);
  std::vector<double> tau(times.size());
  for (std::size_t i = 0; i < times.size(); ++i)
    tau[i] = 1.0 / (gronwall_factor(C, I[i]) * (1.0 / tau0 + C * K[i]));
  return tau;
}

RadiusTracker::RadiusTracker(double C, double C_tilde, double tau0, bool halved_c1) : halved_(halved_c1) {
  if (!(C > 0.0)) throw InvalidArgument("radius constant C must be positive");
  if (!(tau0 > 0.0)) throw InvalidArgument("tau0 must be positive");
  model_.C = C;
  model_.C_tilde = C_tilde;
  model_.tau0 = tau0;
}

RadiusTracker::Point RadiusTracker::push(double t, double grad_sum, double hr, double x0) {
  const double C = model_.C;
  if (!started_) {
    started_ = true;
    model_ = make_radius_model(C, model_.C_tilde, model_.tau0, hr, x0, halved_);
    t0_ = t_ = t;
    x0_ = x0;
    grad_ = grad_sum;
    hr_ = hr;
    M_ = x0;
    tau_ = model_.tau0;
    return {t, tau_, radius_lower_bound(0.0, 0.0, model_), 0.0, M_};
  }
  if (!(t > t_)) throw InvalidArgument("RadiusTracker: sample times must increase");
  const double dt = t - t_;
  const double I_new = I_ + 0.5 * dt * (grad_ + grad_sum);
  const double G_old = gronwall_factor(C, I_), G_new = gronwall_factor(C, I_new);
  J_ += 0.5 * dt * (hr_ * hr_ / G_old + hr * hr / G_new);
  const double M_new = G_new * (x0_ + C * (1.0 + model_.tau0) * J_);
  tau_ = advance(tau_, t_, t, C * grad_, C * grad_sum, C * (hr_ + M_), C * (hr + M_new), 1e-3);
  t_ = t;
  grad_ = grad_sum;
  hr_ = hr;
  I_ = I_new;
  M_ = M_new;
  return {t, tau_, radius_lower_bound(t - t0_, I_, model_), I_, M_};
}

double calibrate_C(const std::vector<double>& times, const std::vector<double>& grad_sum,
                   const std::vector<double>& hr, const std::vector<double>& tau_fit, double tau0,
                   double x0) {
  require_same_length(times.size(), grad_sum.size(), "calibrate_C");
  require_same_length(times.size(), hr.size(), "calibrate_C");
  require_same_length(times.size(), tau_fit.size(), "calibrate_C");
  const auto feasible = [&](double C) {
    RadiusTracker tr(C, C, tau0);
    try {
      for (std::size_t i = 0; i < times.size(); ++i) {
        const double tau = tr.push(times[i], grad_sum[i], hr[i], x0).tau;
        if (std::isfinite(tau_fit[i]) && tau > tau_fit[i]) return false;
      }
    } catch (const NumericalAbort&) {
      return true;  // collapsed radius lies below any fit
    }
    return true;
  };
  double lo = 1e-8, hi = 1e8;
  if (feasible(lo)) return lo;
  if (!feasible(hi)) throw InvalidArgument("calibrate_C: no C in [1e-8, 1e8] keeps tau below tau_fit");
  while (hi / lo > 1.0 + 1e-7) {
    const double mid = std::sqrt(lo * hi);
    (feasible(mid) ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace gmhd
