#include "gmhd/initial.hpp"

#include <cmath>
#include <random>
#include <string>

#include "gmhd/errors.hpp"
#include "gmhd/spectral_ops.hpp"
#include "gmhd/transform.hpp"

namespace gmhd {
namespace {

void check_band(const Grid& grid, int kmax) {
  if (kmax < 1) throw InvalidArgument("kmax must be >= 1");
  if (3 * kmax >= grid.n()) {
    throw InvalidArgument("kmax = " + std::to_string(kmax) + " aliases on an n = " +
                          std::to_string(grid.n()) + " grid (need 3 kmax < n)");
  }
}

// Upper half of the band: exactly one of each {k, -k} pair.
template <class Fn>
void for_each_half_mode(int kmax, Fn&& fn) {
  for (int a = -kmax; a <= kmax; ++a)
    for (int b = -kmax; b <= kmax; ++b)
      for (int c = -kmax; c <= kmax; ++c) {
        const bool upper = a > 0 || (a == 0 && (b > 0 || (b == 0 && c > 0)));
        if (upper) fn(WaveVector{a, b, c});
      }
}

Vec3c project_out(const WaveVector& k, Vec3c v) {
  const double kk[3] = {double(k.k1), double(k.k2), double(k.k3)};
  const Complex f = (kk[0] * v[0] + kk[1] * v[1] + kk[2] * v[2]) / double(k.norm2());
  for (int c = 0; c < 3; ++c) v[c] -= kk[c] * f;
  return v;
}

SpectralField band_field(const Grid& grid, std::mt19937_64& rng, const RandomBand& band) {
  std::normal_distribution<double> normal(0.0, 1.0);
  SpectralField v(grid);
  for_each_half_mode(band.kmax, [&](const WaveVector& k) {
    Vec3c z;
    double mag = 0.0;
    // Redraw in the (measure-zero) event of a vanishing projection.
    while (mag < 1e-8) {
      for (auto& c : z) c = Complex(normal(rng), normal(rng));
      z = project_out(k, z);
      mag = std::sqrt(std::norm(z[0]) + std::norm(z[1]) + std::norm(z[2]));
    }
    const double scale = band.amplitude * std::exp(-band.decay * k.l1()) / mag;
    for (auto& c : z) c *= scale;
    v.set_real_mode(k, z);
  });
  return leray_project(v);
}

}  // namespace

SpectralField sample_field(const Grid& grid,
                           const std::function<std::array<double, 3>(double, double, double)>& f) {
  PhysicalField p(grid);
  const int n = grid.n();
  const double h = grid.spacing();
  for (int i1 = 0; i1 < n; ++i1)
    for (int i2 = 0; i2 < n; ++i2)
      for (int i3 = 0; i3 < n; ++i3) {
        const auto v = f(i1 * h, i2 * h, i3 * h);
        const std::size_t idx = grid.flat(i1, i2, i3);
        for (int c = 0; c < 3; ++c) p.component(c)[idx] = v[c];
      }
  SpectralField s = to_spectral(p);
  const double floor = 1e-15 * s.max_abs();
  for (int c = 0; c < 3; ++c)
    for (auto& z : s.component(c))
      if (std::abs(z) < floor) z = Complex{};
  return s;
}

MHDState taylor_green_mhd(const Grid& grid) {
  using std::cos;
  using std::sin;
  MHDState s{sample_field(grid,
                          [](double x, double y, double z) {
                            return std::array{sin(x) * cos(y) * cos(z), -cos(x) * sin(y) * cos(z), 0.0};
                          }),
             sample_field(grid,
                          [](double x, double y, double z) {
                            return std::array{cos(x) * sin(y) * sin(z), sin(x) * cos(y) * sin(z),
                                              -2.0 * sin(x) * sin(y) * cos(z)};
                          }),
             0.0};
  s.u = leray_project(s.u);
  s.h = leray_project(s.h);
  return s;
}

MHDState orszag_tang_3d(const Grid& grid) {
  using std::sin;
  MHDState s{sample_field(grid,
                          [](double x, double y, double) {
                            return std::array{-2.0 * sin(y), 2.0 * sin(x), 0.0};
                          }),
             sample_field(grid,
                          [](double x, double y, double z) {
                            return std::array{-2.0 * sin(2.0 * y) + sin(z), 2.0 * sin(x) + sin(z), 0.0};
                          }),
             0.0};
  s.u = leray_project(s.u);
  s.h = leray_project(s.h);
  return s;
}

MHDState random_band(const Grid& grid, const RandomBand& band) {
  check_band(grid, band.kmax);
  std::mt19937_64 rng(band.seed);
  SpectralField u = band_field(grid, rng, band);
  SpectralField h = band_field(grid, rng, band);
  return {std::move(u), std::move(h), 0.0};
}

SpectralField random_field(const Grid& grid, std::uint64_t seed, int kmax, bool solenoidal,
                           double amplitude, double decay) {
  if (kmax < 1 || 2 * kmax >= grid.n()) throw InvalidArgument("random_field needs 1 <= kmax < n/2");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  SpectralField v(grid);
  for_each_half_mode(kmax, [&](const WaveVector& k) {
    const double scale = amplitude * std::exp(-decay * k.l1());
    Vec3c z;
    for (auto& c : z) c = scale * Complex(normal(rng), normal(rng));
    if (solenoidal) z = project_out(k, z);
    v.set_real_mode(k, z);
  });
  return solenoidal ? leray_project(v) : v;
}

MHDState init_state(const InitSpec& spec, const Grid& grid) {
  switch (spec.kind) {
    case InitKind::taylor_green_mhd:
      return taylor_green_mhd(grid);
    case InitKind::orszag_tang_3d:
      return orszag_tang_3d(grid);
    case InitKind::random_band:
      return random_band(grid, spec.band);
  }
  throw InvalidArgument("unknown initial condition kind");
}

}  // namespace gmhd
