#include "gmhd/field_ops.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "gmhd/errors.hpp"
#include "gmhd/spectral_ops.hpp"
#include "gmhd/transform.hpp"

namespace gmhd {

void validate(const MultiplierSpec& spec) {
  if (spec.m < 0 || spec.m > 3) throw InvalidArgument("multiplier direction must be 0..3");
  if (!(spec.r >= 0.0)) throw InvalidArgument("multiplier exponent r must be >= 0");
  if (!(spec.tau >= 0.0)) throw InvalidArgument("multiplier radius tau must be >= 0");
  if (!(spec.s >= 1.0)) throw InvalidArgument("Gevrey index s must be >= 1");
}

double multiplier_symbol(const WaveVector& k, const MultiplierSpec& spec) {
  const int q = spec.m == 0 ? k.l1() : std::abs(k[spec.m - 1]);
  if (q == 0) return spec.r == 0.0 ? 1.0 : 0.0;
  const double root = spec.s == 1.0 ? double(q) : std::pow(double(q), 1.0 / spec.s);
  const double log_weight = spec.r * std::log(double(q)) + spec.tau * root;
  static const double log_max = std::log(std::numeric_limits<double>::max());
  if (log_weight > log_max) {
    throw OverflowError("Gevrey weight overflows at mode (" + std::to_string(k.k1) + ", " +
                        std::to_string(k.k2) + ", " + std::to_string(k.k3) + ")");
  }
  const double power = spec.r == 0.0 ? 1.0 : std::pow(double(q), spec.r);
  return spec.tau == 0.0 ? power : power * std::exp(spec.tau * root);
}

SpectralField lambda_apply(const SpectralField& v, const MultiplierSpec& spec) {
  validate(spec);
  const Grid& g = v.grid();
  SpectralField out(g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const WaveVector k = g.wave(i);
    const Vec3c a = v.at(i);
    if (k.is_zero() || a == Vec3c{}) continue;
    const double w = multiplier_symbol(k, spec);
    out.set(i, {w * a[0], w * a[1], w * a[2]});
  }
  return out;
}

double multiplier_norm(const SpectralField& v, const MultiplierSpec& spec) {
  validate(spec);
  const Grid& g = v.grid();
  double acc = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const WaveVector k = g.wave(i);
    if (k.is_zero()) continue;
    const Vec3c a = v.at(i);
    const double mag2 = std::norm(a[0]) + std::norm(a[1]) + std::norm(a[2]);
    if (mag2 == 0.0) continue;
    const double w = multiplier_symbol(k, spec);
    acc += w * w * mag2;
  }
  return std::sqrt(kVolume * acc);
}

SpectralField hilbert_sign(const SpectralField& v, int m) {
  if (m < 1 || m > 3) throw InvalidArgument("hilbert_sign direction must be 1..3");
  const Grid& g = v.grid();
  SpectralField out(g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const int km = g.wave(i)[m - 1];
    if (km == 0) continue;
    const Vec3c a = v.at(i);
    out.set(i, km > 0 ? a : Vec3c{-a[0], -a[1], -a[2]});
  }
  return out;
}

SpectralField curl(const SpectralField& v) {
  const Grid& g = v.grid();
  SpectralField out(g);
  const Complex I(0.0, 1.0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const WaveVector k = g.wave(i);
    const Vec3c a = v.at(i);
    const double k1 = k.k1, k2 = k.k2, k3 = k.k3;
    out.set(i, {I * (k2 * a[2] - k3 * a[1]), I * (k3 * a[0] - k1 * a[2]), I * (k1 * a[1] - k2 * a[0])});
  }
  return out;
}

SpectralField biot_savart(const SpectralField& w) {
  const Grid& g = w.grid();
  double worst_div = 0.0;
  double scale = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const WaveVector k = g.wave(i);
    const Vec3c a = w.at(i);
    const Complex d = double(k.k1) * a[0] + double(k.k2) * a[1] + double(k.k3) * a[2];
    worst_div = std::max(worst_div, std::abs(d));
    const double amp = std::sqrt(std::norm(a[0]) + std::norm(a[1]) + std::norm(a[2]));
    scale = std::max(scale, std::sqrt(double(k.norm2())) * amp);
  }
  if (worst_div > 1e-10 * scale) {
    throw InvalidArgument("biot_savart: input is not divergence-free (max |k.w_k| = " +
                          std::to_string(worst_div) + ")");
  }
  SpectralField out(g);
  const Complex I(0.0, 1.0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const WaveVector k = g.wave(i);
    if (k.is_zero()) continue;
    const Vec3c a = w.at(i);
    const double k1 = k.k1, k2 = k.k2, k3 = k.k3;
    const double inv = 1.0 / double(k.norm2());
    out.set(i, {I * inv * (k2 * a[2] - k3 * a[1]), I * inv * (k3 * a[0] - k1 * a[2]),
                I * inv * (k1 * a[1] - k2 * a[0])});
  }
  return out;
}

double gradient_norm(const SpectralField& v) {
  const Grid& g = v.grid();
  double acc = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Vec3c a = v.at(i);
    acc += double(g.wave(i).norm2()) * (std::norm(a[0]) + std::norm(a[1]) + std::norm(a[2]));
  }
  return std::sqrt(kVolume * acc);
}

SpectralField advect(const SpectralField& a, const SpectralField& b) {
  require_same_grid(a, b, "advect");
  const Grid& g = a.grid();
  const PhysicalField ap = to_physical(a);
  const PhysicalJacobian jb = physical_jacobian(b);
  PhysicalField prod(g);
  for (int i = 0; i < 3; ++i) {
    auto out = prod.component(i);
    for (std::size_t p = 0; p < g.size(); ++p) {
      out[p] = ap.component(0)[p] * jb[i][0][p] + ap.component(1)[p] * jb[i][1][p] +
               ap.component(2)[p] * jb[i][2][p];
    }
  }
  SpectralField result = to_spectral(prod);
  dealias_in_place(result);
  return result;
}

}  // namespace gmhd
