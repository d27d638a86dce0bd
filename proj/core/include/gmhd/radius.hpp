#pragma once

#include <cmath>
#include <vector>

namespace gmhd {

/// -(a tau + b tau^2), the right-hand side of the radius equation with
/// a = C(|grad u|_inf + |grad h|_inf) and b = C(|Psi|_{H^r} + M).
double radius_rhs(double tau, double a, double b);

/// Exact solution of tau' = -(a tau + b tau^2) for frozen a, b >= 0.
double bernoulli_radius(double tau0, double a, double b, double t);

/// RK4 integration of the radius equation along sampled coefficients, linearly
/// interpolated between samples, with substeps no longer than `h_max` and
/// shortened further where a + 2 b tau makes the equation stiff.
/// Returns tau at every sample time (tau[0] = tau0).  Throws NumericalAbort
/// when tau drops to 1e-300 or below.
std::vector<double> integrate_radius(const std::vector<double>& times, const std::vector<double>& a,
                                     const std::vector<double>& b, double tau0, double h_max = 1e-3);

/// Cumulative trapezoidal integral of f over the sample times (starts at 0).
std::vector<double> cumulative_trapezoid(const std::vector<double>& times, const std::vector<double>& f);

/// Constants of the explicit minorant
///   tau(t) >= exp(-C I(t)) / (1/tau0 + C0 t + (C1/2) t^2).
struct RadiusModel {
  double C = 1.0;
  double C_tilde = 1.0;
  double tau0 = 0.1;
  double C0 = 0.0;
  double C1 = 0.0;
};

/// C0 = C(|Psi0|_{H^r} + |Psi0|_X) and C1 = C^2 (1+tau0) |Psi0|^2_{H^r}, which
/// is what integrating the majorant of M(t) produces.  `halved` selects the
/// variant with an extra factor 1/2 in C1; that bound can exceed the
/// tracked radius and is kept only for comparison.
RadiusModel make_radius_model(double C, double C_tilde, double tau0, double hr0, double x0,
                              bool halved = false);

/// exp(-C I) / (1/tau0 + C0 t + (C1/2) t^2)
double radius_lower_bound(double t, double I, const RadiusModel& model);

/// hr0 exp(C_tilde I)
double hr_growth_bound(double I, double C_tilde, double hr0);

/// G = exp(C I)
double gronwall_factor(double C, double I);

/// Smallest C_tilde >= 0 with hr(t) <= hr(0) exp(C_tilde I(t)) at every sample.
/// Needs >= 10 samples; throws InvalidArgument ("unbounded constant") when the
/// norm grows at a sample where I = 0.
double estimate_C_tilde(const std::vector<double>& I, const std::vector<double>& hr);

/// M(t) = G(t)[x0 + C(1+tau0) int_0^t hr^2 G^{-1}], trapezoidal quadrature.
std::vector<double> gronwall_majorant(const std::vector<double>& times, const std::vector<double>& I,
                                      const std::vector<double>& hr, double x0, double C, double tau0);

/// tau(t) = G^{-1} [1/tau0 + C int_0^t (hr + M) G^{-1}]^{-1}, trapezoidal.
std::vector<double> closed_form_radius(const std::vector<double>& times, const std::vector<double>& I,
                                       const std::vector<double>& hr, const std::vector<double>& M,
                                       double C, double tau0);

/// Streaming version of the above, fed one diagnostic sample at a time.  The
/// first push fixes t0 and the initial data (hr0; x0 = |Psi0|_X at tau0).
class RadiusTracker {
 public:
  struct Point {
    double t = 0.0;
    double tau = 0.0;
    double lower = 0.0;
    double I = 0.0;
    double M = 0.0;
  };

  RadiusTracker(double C, double C_tilde, double tau0, bool halved_c1 = false);

  /// x0 is only read on the first push.
  Point push(double t, double grad_sum, double hr, double x0 = 0.0);

  const RadiusModel& model() const { return model_; }
  bool started() const { return started_; }

 private:
  RadiusModel model_;
  bool halved_;
  bool started_ = false;
  double t0_ = 0.0, x0_ = 0.0;
  double t_ = 0.0, grad_ = 0.0, hr_ = 0.0;
  double I_ = 0.0, J_ = 0.0, M_ = 0.0, tau_ = 0.0;
};

/// Smallest C (to ~1e-6 relative) for which the tracked radius stays at or
/// below tau_fit at every sample with a finite fit; x0 = |Psi0|_X at tau0.  Throws InvalidArgument when no C in [1e-8, 1e8] works.
double calibrate_C(const std::vector<double>& times, const std::vector<double>& grad_sum,
                   const std::vector<double>& hr, const std::vector<double>& tau_fit, double tau0,
                   double x0);

}  // namespace gmhd
