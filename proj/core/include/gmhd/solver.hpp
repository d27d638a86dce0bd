#pragma once

#include "gmhd/gevrey.hpp"
#include "gmhd/spectral_field.hpp"

namespace gmhd {

struct Tendency {
  SpectralField du;
  SpectralField dh;
};

/// du = -P[(u.grad)u - (h.grad)h], dh = -P[(u.grad)h - (h.grad)u], dealiased.
/// One fused pass: 24 inverse and 6 forward transforms.
Tendency rhs_primitive(const MHDState& s);

/// Tendencies of the vorticity-current pair.
///   domega = -(u.grad)omega + (h.grad)J + (omega.grad)u - (J.grad)h
///   dJ     = -(u.grad)J + (h.grad)omega + (J.grad)u - (omega.grad)h
///            - 2 sum_l grad u_l x grad h_l
/// which is exactly the curl of rhs_primitive.
struct CurlTendency {
  SpectralField domega;
  SpectralField dj;
};
CurlTendency rhs_curl(const MHDState& s);

/// The J tendency in the commonly quoted form
///   -(u.grad)J + (h.grad)omega + (omega.grad)h - (J.grad)u,
/// which is not the curl of the induction equation.  Reporting only.
SpectralField literal_current_tendency(const MHDState& s);

/// Incompressible Euler tendency -P[(u.grad)u].
SpectralField rhs_euler(const SpectralField& u);

/// Classical RK4 step on rhs_primitive; the result is re-projected and
/// dealiased and t advances by dt.  Throws NumericalAbort on a non-finite stage.
MHDState step_rk4(const MHDState& s, double dt);

/// cfl * dx / max_x(|u(x)| + |h(x)|); +infinity for a zero state.
double cfl_dt(const MHDState& s, double cfl);

double energy(const MHDState& s);
double cross_helicity(const MHDState& s);

struct DiagnosticsRecord {
  double t = 0.0;
  double energy = 0.0;
  double cross_helicity = 0.0;
  /// |omega|_inf + |J|_inf
  double bkm_integrand = 0.0;
  /// |grad u|_inf + |grad h|_inf
  double grad_sum = 0.0;
  double hr_norm = 0.0;
  double x_norm = 0.0;
  double y_norm = 0.0;
  double tau = 0.0;
  double tau_fit = 0.0;
  double tau_lower = 0.0;
};

}  // namespace gmhd
