#include "gmhd/spectral_field.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gmhd/errors.hpp"

namespace gmhd {

SpectralField::SpectralField(const Grid& grid) : grid_(grid) {
  for (auto& c : comp_) c.assign(grid.size(), Complex{});
}

void SpectralField::set_real_mode(const WaveVector& k, const Vec3c& v) {
  if (k.is_zero()) throw InvalidArgument("the k = 0 mode is pinned to zero");
  if (!grid_.in_range(k) || !grid_.in_range(-k)) {
    throw InvalidArgument("mode outside the conjugate-symmetric range");
  }
  set_mode(k, v);
  set_mode(-k, {std::conj(v[0]), std::conj(v[1]), std::conj(v[2])});
}

SpectralField& SpectralField::operator+=(const SpectralField& o) {
  require_same_grid(*this, o, "operator+=");
  for (int c = 0; c < 3; ++c) {
    auto& a = comp_[c];
    const auto& b = o.comp_[c];
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  }
  return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& o) {
  require_same_grid(*this, o, "operator-=");
  for (int c = 0; c < 3; ++c) {
    auto& a = comp_[c];
    const auto& b = o.comp_[c];
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  }
  return *this;
}

SpectralField& SpectralField::operator*=(double s) {
  for (auto& c : comp_)
    for (auto& z : c) z *= s;
  return *this;
}

void SpectralField::axpy(double a, const SpectralField& x) {
  require_same_grid(*this, x, "axpy");
  for (int c = 0; c < 3; ++c) {
    auto& y = comp_[c];
    const auto& xs = x.comp_[c];
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * xs[i];
  }
}

double SpectralField::max_abs() const {
  double m = 0.0;
  for (const auto& c : comp_)
    for (const auto& z : c) m = std::max(m, std::abs(z));
  return m;
}

bool SpectralField::all_finite() const {
  for (const auto& c : comp_)
    for (const auto& z : c)
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
SpectralField operator*(double s, SpectralField a) { return a *= s; }

PhysicalField::PhysicalField(const Grid& grid) : grid_(grid) {
  for (auto& c : comp_) c.assign(grid.size(), 0.0);
}

double PhysicalField::max_abs() const {
  double m = 0.0;
  for (const auto& c : comp_)
    for (double x : c) m = std::max(m, std::abs(x));
  return m;
}

double PhysicalField::max_magnitude() const {
  double m = 0.0;
  for (std::size_t i = 0; i < grid_.size(); ++i) {
    const double s = comp_[0][i] * comp_[0][i] + comp_[1][i] * comp_[1][i] + comp_[2][i] * comp_[2][i];
    m = std::max(m, s);
  }
  return std::sqrt(m);
}

Complex inner(const SpectralField& a, const SpectralField& b) {
  require_same_grid(a, b, "inner");
  Complex acc{};
  for (int c = 0; c < 3; ++c) {
    const auto x = a.component(c);
    const auto y = b.component(c);
    for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * std::conj(y[i]);
  }
  return kVolume * acc;
}

double l2_norm(const SpectralField& v) {
  double acc = 0.0;
  for (int c = 0; c < 3; ++c)
    for (const auto& z : v.component(c)) acc += std::norm(z);
  return std::sqrt(kVolume * acc);
}

double hermitian_defect(const SpectralField& v) {
  const Grid& g = v.grid();
  double worst = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const WaveVector k = g.wave(i);
    if (g.is_nyquist(k)) {
      // No partner inside the range; the mode must vanish for a real field.
      for (int c = 0; c < 3; ++c) worst = std::max(worst, std::abs(v.component(c)[i]));
      continue;
    }
    const std::size_t j = g.flat_of(-k);
    for (int c = 0; c < 3; ++c) {
      worst = std::max(worst, std::abs(v.component(c)[j] - std::conj(v.component(c)[i])));
    }
  }
  return worst;
}

double divergence_residual(const SpectralField& v) {
  const Grid& g = v.grid();
  double worst = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const WaveVector k = g.wave(i);
    const Complex d = double(k.k1) * v.component(0)[i] + double(k.k2) * v.component(1)[i] +
                      double(k.k3) * v.component(2)[i];
    worst = std::max(worst, std::abs(d));
  }
  return worst;
}

void require_same_grid(const SpectralField& a, const SpectralField& b, const char* what) {
  if (!(a.grid() == b.grid())) {
    throw GridMismatch(std::string(what) + ": grid size mismatch (" + std::to_string(a.grid().n()) +
                       " vs " + std::to_string(b.grid().n()) + ")");
  }
}

}  // namespace gmhd
