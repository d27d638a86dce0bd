#pragma once

#include <array>
#include <cmath>
#include <compare>
#include <cstddef>
#include <cstdlib>
#include <numbers>

namespace gmhd {

/// Signed Fourier mode index on the torus.
struct WaveVector {
  int k1 = 0;
  int k2 = 0;
  int k3 = 0;

  constexpr int operator[](int axis) const { return axis == 0 ? k1 : (axis == 1 ? k2 : k3); }
  constexpr int l1() const { return std::abs(k1) + std::abs(k2) + std::abs(k3); }
  constexpr int norm2() const { return k1 * k1 + k2 * k2 + k3 * k3; }
  constexpr bool is_zero() const { return k1 == 0 && k2 == 0 && k3 == 0; }
  constexpr WaveVector operator-() const { return {-k1, -k2, -k3}; }
  constexpr WaveVector operator+(const WaveVector& o) const { return {k1 + o.k1, k2 + o.k2, k3 + o.k3}; }

  friend constexpr auto operator<=>(const WaveVector&, const WaveVector&) = default;
};

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
/// (2 pi)^3, the torus volume; every L2 quantity carries it.
inline constexpr double kVolume = kTwoPi * kTwoPi * kTwoPi;

/// Cubic grid of n points per dimension on [0, 2 pi)^3.  Mode indices run over
/// [-n/2+1, n/2] in FFT storage order.
class Grid {
 public:
  /// Throws InvalidArgument unless n is even and n >= 8.
  explicit Grid(int n);

  int n() const { return n_; }
  std::size_t size() const { return static_cast<std::size_t>(n_) * n_ * n_; }
  double spacing() const { return kTwoPi / n_; }

  /// Largest retained |k_i| under the 2/3 rule (3|k_i| < n).
  int dealias_cutoff() const { return (n_ - 1) / 3; }

  int wavenumber(int index) const { return index <= n_ / 2 ? index : index - n_; }
  int index_of(int k) const { return k >= 0 ? k : k + n_; }

  WaveVector wave(std::size_t flat) const {
    const auto n = static_cast<std::size_t>(n_);
    const int i3 = static_cast<int>(flat % n);
    const int i2 = static_cast<int>((flat / n) % n);
    const int i1 = static_cast<int>(flat / (n * n));
    return {wavenumber(i1), wavenumber(i2), wavenumber(i3)};
  }

  std::size_t flat(int i1, int i2, int i3) const {
    return (static_cast<std::size_t>(i1) * n_ + i2) * n_ + i3;
  }

  /// Flat index of mode k; k must lie in the truncation range.
  std::size_t flat_of(const WaveVector& k) const {
    return flat(index_of(k.k1), index_of(k.k2), index_of(k.k3));
  }

  bool in_range(const WaveVector& k) const {
    const auto ok = [this](int c) { return c > -n_ / 2 && c <= n_ / 2; };
    return ok(k.k1) && ok(k.k2) && ok(k.k3);
  }

  /// True when some component equals n/2; such modes have no partner at -k.
  bool is_nyquist(const WaveVector& k) const {
    return k.k1 == n_ / 2 || k.k2 == n_ / 2 || k.k3 == n_ / 2;
  }

  bool retained(const WaveVector& k) const {
    const int c = dealias_cutoff();
    return std::abs(k.k1) <= c && std::abs(k.k2) <= c && std::abs(k.k3) <= c;
  }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  int n_;
};

}  // namespace gmhd
