#include "gmhd/solver.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "gmhd/errors.hpp"
#include "gmhd/field_ops.hpp"
#include "gmhd/spectral_ops.hpp"
#include "gmhd/transform.hpp"

namespace gmhd {
namespace {

// (a.grad) b at every point, for a in physical space and grad b as a Jacobian.
inline double transport(const PhysicalField& a, const PhysicalJacobian& gb, int i, std::size_t p) {
  return a.component(0)[p] * gb[i][0][p] + a.component(1)[p] * gb[i][1][p] + a.component(2)[p] * gb[i][2][p];
}

// (grad a . grad b cross) term: (sum_l grad a_l x grad b_l)_i
inline double gradient_cross(const PhysicalJacobian& ga, const PhysicalJacobian& gb, int i, std::size_t p) {
  const int j = (i + 1) % 3, k = (i + 2) % 3;
  double acc = 0.0;
  for (int l = 0; l < 3; ++l) acc += ga[l][j][p] * gb[l][k][p] - ga[l][k][p] * gb[l][j][p];
  return acc;
}

SpectralField finish(PhysicalField& prod, double sign, bool project) {
  SpectralField out = to_spectral(prod);
  dealias_in_place(out);
  if (project) out = leray_project(out);
  out *= sign;
  return out;
}

struct PhysicalState {
  PhysicalField u, h;
  PhysicalJacobian gu, gh;
  explicit PhysicalState(const MHDState& s)
      : u(to_physical(s.u)), h(to_physical(s.h)), gu(physical_jacobian(s.u)), gh(physical_jacobian(s.h)) {}
};

}  // namespace

Tendency rhs_primitive(const MHDState& s) {
  require_same_grid(s.u, s.h, "rhs_primitive");
  const Grid& g = s.u.grid();
  const PhysicalState ps(s);
  PhysicalField nu(g), nh(g);
  for (int i = 0; i < 3; ++i) {
    auto a = nu.component(i);
    auto b = nh.component(i);
    for (std::size_t p = 0; p < g.size(); ++p) {
      a[p] = transport(ps.u, ps.gu, i, p) - transport(ps.h, ps.gh, i, p);
      b[p] = transport(ps.u, ps.gh, i, p) - transport(ps.h, ps.gu, i, p);
    }
  }
  return {finish(nu, -1.0, true), finish(nh, -1.0, true)};
}

CurlTendency rhs_curl(const MHDState& s) {
  require_same_grid(s.u, s.h, "rhs_curl");
  const Grid& g = s.u.grid();
  const SpectralField omega = curl(s.u), j = curl(s.h);
  const PhysicalState ps(s);
  const PhysicalField wp = to_physical(omega), jp = to_physical(j);
  const PhysicalJacobian gw = physical_jacobian(omega), gj = physical_jacobian(j);
  PhysicalField dw(g), dj(g);
  for (int i = 0; i < 3; ++i) {
    auto a = dw.component(i);
    auto b = dj.component(i);
    for (std::size_t p = 0; p < g.size(); ++p) {
      a[p] = -transport(ps.u, gw, i, p) + transport(ps.h, gj, i, p) + transport(wp, ps.gu, i, p) -
             transport(jp, ps.gh, i, p);
      b[p] = -transport(ps.u, gj, i, p) + transport(ps.h, gw, i, p) + transport(jp, ps.gu, i, p) -
             transport(wp, ps.gh, i, p) - 2.0 * gradient_cross(ps.gu, ps.gh, i, p);
    }
  }
  return {finish(dw, 1.0, false), finish(dj, 1.0, false)};
}

SpectralField literal_current_tendency(const MHDState& s) {
  require_same_grid(s.u, s.h, "literal_current_tendency");
  const Grid& g = s.u.grid();
  const SpectralField omega = curl(s.u), j = curl(s.h);
  const PhysicalState ps(s);
  const PhysicalField wp = to_physical(omega), jp = to_physical(j);
  const PhysicalJacobian gw = physical_jacobian(omega), gj = physical_jacobian(j);
  PhysicalField dj(g);
  for (int i = 0; i < 3; ++i) {
    auto b = dj.component(i);
    for (std::size_t p = 0; p < g.size(); ++p)
      b[p] = -transport(ps.u, gj, i, p) + transport(ps.h, gw, i, p) + transport(wp, ps.gh, i, p) -
             transport(jp, ps.gu, i, p);
  }
  return finish(dj, 1.0, false);
}

SpectralField rhs_euler(const SpectralField& u) {
  SpectralField out = leray_project(advect(u, u));
  out *= -1.0;
  return out;
}

MHDState step_rk4(const MHDState& s, double dt) {
  if (!(dt > 0.0)) throw InvalidArgument("time step must be positive");
  const auto check = [&](const Tendency& k, int stage) {
    if (!k.du.all_finite() || !k.dh.all_finite()) {
      throw NumericalAbort("non-finite tendency in RK4 stage " + std::to_string(stage) + " at t = " +
                           std::to_string(s.t) + " (dt = " + std::to_string(dt) + ")");
    }
  };
  const auto shifted = [&](const Tendency& k, double a) {
    MHDState x = s;
    x.u.axpy(a, k.du);
    x.h.axpy(a, k.dh);
    return x;
  };
  const Tendency k1 = rhs_primitive(s);
  check(k1, 1);
  const Tendency k2 = rhs_primitive(shifted(k1, dt / 2));
  check(k2, 2);
  const Tendency k3 = rhs_primitive(shifted(k2, dt / 2));
  check(k3, 3);
  const Tendency k4 = rhs_primitive(shifted(k3, dt));
  check(k4, 4);
  MHDState out = s;
  for (const auto& [k, w] : {std::pair{&k1, 1.0}, {&k2, 2.0}, {&k3, 2.0}, {&k4, 1.0}}) {
    out.u.axpy(dt * w / 6.0, k->du);
    out.h.axpy(dt * w / 6.0, k->dh);
  }
  dealias_in_place(out.u);
  dealias_in_place(out.h);
  out.u = leray_project(out.u);
  out.h = leray_project(out.h);
  out.t = s.t + dt;
  if (!out.u.all_finite() || !out.h.all_finite())
    throw NumericalAbort("non-finite state after RK4 step at t = " + std::to_string(out.t));
  return out;
}

double cfl_dt(const MHDState& s, double cfl) {
  if (!(cfl > 0.0)) throw InvalidArgument("CFL number must be positive");
  const PhysicalField u = to_physical(s.u), h = to_physical(s.h);
  double vmax = 0.0;
  for (std::size_t p = 0; p < s.u.size(); ++p) {
    const double a = std::hypot(u.component(0)[p], u.component(1)[p], u.component(2)[p]);
    const double b = std::hypot(h.component(0)[p], h.component(1)[p], h.component(2)[p]);
    vmax = std::max(vmax, a + b);
  }
  if (vmax == 0.0) return std::numeric_limits<double>::infinity();
  return cfl * s.u.grid().spacing() / vmax;
}

double energy(const MHDState& s) {
  const double a = l2_norm(s.u), b = l2_norm(s.h);
  return 0.5 * (a * a + b * b);
}

double cross_helicity(const MHDState& s) { return inner(s.u, s.h).real(); }

}  // namespace gmhd
