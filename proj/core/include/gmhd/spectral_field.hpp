#pragma once

#include <array>
#include <complex>
#include <span>
#include <vector>

#include "gmhd/grid.hpp"

namespace gmhd {

using Complex = std::complex<double>;
using Vec3c = std::array<Complex, 3>;

/// Fourier coefficients of a 3-component field on T^3, stored as a full
/// complex cube per component (no half-spectrum).  The represented function
/// is v(x) = sum_k vhat_k e^{i k.x}.
class SpectralField {
 public:
  explicit SpectralField(const Grid& grid);

  const Grid& grid() const { return grid_; }
  std::size_t size() const { return grid_.size(); }

  std::span<Complex> component(int c) { return comp_[c]; }
  std::span<const Complex> component(int c) const { return comp_[c]; }

  Vec3c at(std::size_t flat) const { return {comp_[0][flat], comp_[1][flat], comp_[2][flat]}; }
  void set(std::size_t flat, const Vec3c& v) {
    comp_[0][flat] = v[0];
    comp_[1][flat] = v[1];
    comp_[2][flat] = v[2];
  }
  Vec3c mode(const WaveVector& k) const { return at(grid_.flat_of(k)); }
  void set_mode(const WaveVector& k, const Vec3c& v) { set(grid_.flat_of(k), v); }

  /// Sets mode k and its conjugate partner -k so the field stays real.
  void set_real_mode(const WaveVector& k, const Vec3c& v);

  SpectralField& operator+=(const SpectralField& o);
  SpectralField& operator-=(const SpectralField& o);
  SpectralField& operator*=(double a);
  /// this += a * x
  void axpy(double a, const SpectralField& x);

  double max_abs() const;
  bool all_finite() const;

  friend bool operator==(const SpectralField& a, const SpectralField& b) {
    return a.grid_ == b.grid_ && a.comp_ == b.comp_;
  }

 private:
  Grid grid_;
  std::array<std::vector<Complex>, 3> comp_;
};

SpectralField operator+(SpectralField a, const SpectralField& b);
SpectralField operator-(SpectralField a, const SpectralField& b);
SpectralField operator*(double s, SpectralField a);

/// Samples of a real 3-component field at the n^3 collocation points
/// x = (2 pi/n) * (i1, i2, i3).
class PhysicalField {
 public:
  explicit PhysicalField(const Grid& grid);

  const Grid& grid() const { return grid_; }
  std::span<double> component(int c) { return comp_[c]; }
  std::span<const double> component(int c) const { return comp_[c]; }

  double max_abs() const;
  /// max over points of the Euclidean magnitude |v(x)|.
  double max_magnitude() const;

 private:
  Grid grid_;
  std::array<std::vector<double>, 3> comp_;
};

/// The pair (u, h) at time t.
struct MHDState {
  SpectralField u;
  SpectralField h;
  double t = 0.0;
};

/// L2 inner product (2 pi)^3 sum_k a_k . conj(b_k); real for real fields.
Complex inner(const SpectralField& a, const SpectralField& b);
/// sqrt((2 pi)^3 sum |v_k|^2)
double l2_norm(const SpectralField& v);

/// max |v_{-k} - conj(v_k)| over all modes (0 for an exactly real field).
double hermitian_defect(const SpectralField& v);
/// max_k |k . v_k| over all modes.
double divergence_residual(const SpectralField& v);

void require_same_grid(const SpectralField& a, const SpectralField& b, const char* what);

}  // namespace gmhd
