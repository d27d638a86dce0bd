#include "gmhd/spectral_ops.hpp"

#include <cmath>

#include "gmhd/transform.hpp"

namespace gmhd {

SpectralField leray_project(const SpectralField& v) {
  const Grid& g = v.grid();
  SpectralField out = v;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const WaveVector k = g.wave(i);
    if (k.is_zero()) {
      out.set(i, {});
      continue;
    }
    const Vec3c a = v.at(i);
    const double kk[3] = {double(k.k1), double(k.k2), double(k.k3)};
    const Complex div = kk[0] * a[0] + kk[1] * a[1] + kk[2] * a[2];
    const double k2 = double(k.norm2());
    const double amp = std::sqrt(std::norm(a[0]) + std::norm(a[1]) + std::norm(a[2]));
    if (std::abs(div) <= 1e-14 * std::sqrt(k2) * amp) continue;
    const Complex f = div / k2;
    out.set(i, {a[0] - kk[0] * f, a[1] - kk[1] * f, a[2] - kk[2] * f});
  }
  return out;
}

void dealias_in_place(SpectralField& v) {
  const Grid& g = v.grid();
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!g.retained(g.wave(i))) v.set(i, {});
  }
}

SpectralField dealias(const SpectralField& v) {
  SpectralField out = v;
  dealias_in_place(out);
  return out;
}

void enforce_real(SpectralField& v) {
  for (int c = 0; c < 3; ++c) detail::symmetrize(v.grid(), v.component(c));
}

bool is_dealiased(const SpectralField& v) {
  const Grid& g = v.grid();
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.retained(g.wave(i))) continue;
    for (int c = 0; c < 3; ++c)
      if (v.component(c)[i] != Complex{}) return false;
  }
  return true;
}

}  // namespace gmhd
