#include "gmhd/gevrey.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "gmhd/errors.hpp"
#include "gmhd/field_ops.hpp"
#include "gmhd/transform.hpp"

namespace gmhd {
namespace {

double mag2(const Vec3c& a) { return std::norm(a[0]) + std::norm(a[1]) + std::norm(a[2]); }

const double kLogMax = std::log(std::numeric_limits<double>::max());

double fit_shells(const std::vector<double>& shells, double s) {
  if (!(s >= 1.0)) throw InvalidArgument("Gevrey index s must be >= 1");
  const double top = *std::max_element(shells.begin(), shells.end());
  std::vector<double> xs, ys;
  for (std::size_t q = 1; q < shells.size(); ++q) {
    if (shells[q] <= 1e-14 * top || shells[q] == 0.0) continue;
    xs.push_back(-std::pow(double(q), 1.0 / s));
    ys.push_back(std::log(shells[q]));
  }
  if (xs.size() < 4) {
    throw InvalidArgument("fit_radius needs at least 4 shells above the noise floor (have " +
                          std::to_string(xs.size()) + ")");
  }
  const double n = double(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  return std::max(0.0, sxy / sxx);
}

}  // namespace

void validate(const GevreyParams& p) {
  if (!(p.r >= 0.0)) throw InvalidArgument("r must be >= 0");
  if (!(p.s >= 1.0)) throw InvalidArgument("Gevrey index s must be >= 1");
  if (!(p.tau >= 0.0)) throw InvalidArgument("radius tau must be >= 0");
}

bool above_threshold(const GevreyParams& p) { return p.r > 2.5 + 1.5 / p.s; }

double sobolev_norm(const SpectralField& v, double r) {
  const Grid& g = v.grid();
  double acc = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double m = mag2(v.at(i));
    if (m == 0.0) continue;
    acc += std::pow(1.0 + g.wave(i).norm2(), r) * m;
  }
  return std::sqrt(kVolume * acc);
}

AxisSpectrum::AxisSpectrum(int qmax_) : qmax(qmax_) {
  for (int m = 0; m < 3; ++m) {
    energy[m].assign(qmax + 1, 0.0);
    witness[m].assign(qmax + 1, WaveVector{});
  }
}

void AxisSpectrum::add(const SpectralField& v) {
  const Grid& g = v.grid();
  if (g.n() / 2 > qmax) {
    for (int m = 0; m < 3; ++m) {
      energy[m].resize(g.n() / 2 + 1, 0.0);
      witness[m].resize(g.n() / 2 + 1, WaveVector{});
    }
    qmax = g.n() / 2;
  }
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double e = mag2(v.at(i));
    if (e == 0.0) continue;
    const WaveVector k = g.wave(i);
    for (int m = 0; m < 3; ++m) {
      const int q = std::abs(k[m]);
      if (energy[m][q] == 0.0) witness[m][q] = k;
      energy[m][q] += e;
    }
  }
}

AxisSpectrum axis_spectrum(const SpectralField& v) {
  AxisSpectrum a(v.grid().n() / 2);
  a.add(v);
  return a;
}

double gevrey_norm(const AxisSpectrum& spec, double r, double tau, double s) {
  validate(GevreyParams{r, s, tau});
  // log of each squared term, summed with a common scale to stay finite
  std::vector<double> logs;
  for (int m = 0; m < 3; ++m)
    for (int q = 0; q <= spec.qmax; ++q) {
      const double e = spec.energy[m][q];
      if (e == 0.0) continue;
      if (q == 0) {
        if (r == 0.0) logs.push_back(std::log(e));
        continue;
      }
      const double lw = r * std::log(double(q)) + tau * std::pow(double(q), 1.0 / s);
      if (lw > kLogMax) {
        const WaveVector k = spec.witness[m][q];
        throw OverflowError("Gevrey weight overflows at mode (" + std::to_string(k.k1) + ", " +
                            std::to_string(k.k2) + ", " + std::to_string(k.k3) + ")");
      }
      logs.push_back(2.0 * lw + std::log(e));
    }
  if (logs.empty()) return 0.0;
  const double top = *std::max_element(logs.begin(), logs.end());
  double acc = 0.0;
  for (double l : logs) acc += std::exp(l - top);
  const double result = std::exp(0.5 * top) * std::sqrt(kVolume * acc);
  if (!std::isfinite(result)) throw OverflowError("Gevrey norm exceeds the double range");
  return result;
}

double gevrey_norm(const SpectralField& v, const GevreyParams& p, GevreySpace space) {
  const double r = space == GevreySpace::X ? p.r : p.r + 0.5 / p.s;
  return gevrey_norm(axis_spectrum(v), r, p.tau, p.s);
}

NormRecord compute_norms(const MHDState& s, const GevreyParams& p, int refine) {
  validate(p);
  const SpectralField omega = curl(s.u);
  const SpectralField j = curl(s.h);
  NormRecord n;
  n.hr_omega = sobolev_norm(omega, p.r);
  n.hr_j = sobolev_norm(j, p.r);
  n.hr = std::hypot(n.hr_omega, n.hr_j);
  const AxisSpectrum so = axis_spectrum(omega);
  const AxisSpectrum sj = axis_spectrum(j);
  const double ry = p.r + 0.5 / p.s;
  n.x_omega = gevrey_norm(so, p.r, p.tau, p.s);
  n.x_j = gevrey_norm(sj, p.r, p.tau, p.s);
  n.y_omega = gevrey_norm(so, ry, p.tau, p.s);
  n.y_j = gevrey_norm(sj, ry, p.tau, p.s);
  n.x_norm = std::hypot(n.x_omega, n.x_j);
  n.y_norm = std::hypot(n.y_omega, n.y_j);
  n.grad_u_sup = sup_gradient(s.u, refine);
  n.grad_h_sup = sup_gradient(s.h, refine);
  return n;
}

double sup_gradient(const SpectralField& v, int refine) {
  if (refine < 1) throw InvalidArgument("refine factor must be >= 1");
  double best = 0.0;
  if (refine == 1) {
    const PhysicalJacobian jac = physical_jacobian(v);
    for (const auto& row : jac)
      for (const auto& entry : row)
        for (double x : entry) best = std::max(best, std::abs(x));
    return best;
  }
  // d_j v_i for one (i, j) at a time, on the padded grid
  const Grid& g = v.grid();
  SpectralField d(g);
  for (int j = 0; j < 3; ++j) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      const double kj = g.wave(i)[j];
      const Vec3c a = v.at(i);
      d.set(i, {Complex(0.0, kj) * a[0], Complex(0.0, kj) * a[1], Complex(0.0, kj) * a[2]});
    }
    best = std::max(best, to_physical_refined(d, refine).max_abs());
  }
  return best;
}

double sup_norm(const SpectralField& v, int refine) {
  if (refine < 1) throw InvalidArgument("refine factor must be >= 1");
  return (refine == 1 ? to_physical(v) : to_physical_refined(v, refine)).max_magnitude();
}

std::vector<double> shell_max(const SpectralField& u, const SpectralField* h) {
  const Grid& g = u.grid();
  if (h) require_same_grid(u, *h, "shell_max");
  std::vector<double> shells(3 * (g.n() / 2) + 1, 0.0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    double e = mag2(u.at(i));
    if (h) e += mag2(h->at(i));
    if (e == 0.0) continue;
    const int q = g.wave(i).l1();
    shells[q] = std::max(shells[q], std::sqrt(e));
  }
  return shells;
}

double fit_radius(const SpectralField& v, double s) { return fit_shells(shell_max(v), s); }

double fit_radius(const MHDState& st, double s) { return fit_shells(shell_max(st.u, &st.h), s); }

}  // namespace gmhd
