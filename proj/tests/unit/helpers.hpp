#pragma once

#include <cmath>
#include <complex>

#include "gmhd/spectral_field.hpp"

namespace testutil {

// max |a_k - b_k| over all components and modes
inline double max_diff(const gmhd::SpectralField& a, const gmhd::SpectralField& b) {
  double d = 0.0;
  for (int c = 0; c < 3; ++c) {
    auto x = a.component(c);
    auto y = b.component(c);
    for (std::size_t i = 0; i < x.size(); ++i) d = std::max(d, std::abs(x[i] - y[i]));
  }
  return d;
}

inline double rel_diff(const gmhd::SpectralField& a, const gmhd::SpectralField& b) {
  const double s = std::max(a.max_abs(), b.max_abs());
  return s == 0.0 ? max_diff(a, b) : max_diff(a, b) / s;
}

// Single real Fourier pair c e^{ik.x} + conj(c) e^{-ik.x} on component comp.
inline gmhd::SpectralField single_mode(const gmhd::Grid& g, gmhd::WaveVector k, int comp,
                                       gmhd::Complex c) {
  gmhd::SpectralField v(g);
  gmhd::Vec3c a{};
  a[comp] = c;
  v.set_real_mode(k, a);
  return v;
}

}  // namespace testutil
