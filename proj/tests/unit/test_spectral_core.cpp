#include <cmath>

#include "doctest.h"
#include "gmhd/errors.hpp"
#include "gmhd/initial.hpp"
#include "gmhd/spectral_ops.hpp"
#include "gmhd/transform.hpp"
#include "helpers.hpp"

using namespace gmhd;
using testutil::max_diff;
using testutil::rel_diff;
using testutil::single_mode;

TEST_CASE("grid rejects odd and tiny sizes") {
  CHECK_THROWS_AS(Grid(7), InvalidArgument);
  CHECK_THROWS_AS(Grid(6), InvalidArgument);
  CHECK_NOTHROW(Grid(8));
  CHECK_NOTHROW(Grid(48));
}

TEST_CASE("grid index round trip covers the truncation range") {
  Grid g(16);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const WaveVector k = g.wave(i);
    CHECK(g.in_range(k));
    CHECK(g.flat_of(k) == i);
  }
  CHECK(g.wave(g.flat(8, 0, 0)).k1 == 8);
  CHECK(g.wave(g.flat(9, 0, 0)).k1 == -7);
}

TEST_CASE("cos x1 e2 round trips through physical space") {
  Grid g(16);
  auto v = single_mode(g, {1, 0, 0}, 1, 0.5);
  const PhysicalField p = to_physical(v);
  double err = 0.0;
  for (int i1 = 0; i1 < 16; ++i1)
    for (int i2 = 0; i2 < 16; ++i2)
      for (int i3 = 0; i3 < 16; ++i3) {
        const auto idx = g.flat(i1, i2, i3);
        err = std::max(err, std::abs(p.component(1)[idx] - std::cos(i1 * g.spacing())));
        err = std::max(err, std::abs(p.component(0)[idx]) + std::abs(p.component(2)[idx]));
      }
  CHECK(err < 1e-14);
  CHECK(rel_diff(to_spectral(p), v) < 1e-13);
}

TEST_CASE("zero field transforms to zero") {
  Grid g(8);
  SpectralField z(g);
  CHECK(to_physical(z).max_abs() == 0.0);
  CHECK(to_spectral(to_physical(z)) == z);
}

TEST_CASE("random 16^3 round trip error is below 1e-12 relative") {
  Grid g(16);
  const auto v = random_field(g, 11, 7, false);
  CHECK(hermitian_defect(v) == 0.0);
  const auto back = to_spectral(to_physical(v));
  CHECK(max_diff(back, v) < 1e-12 * v.max_abs());
}

TEST_CASE("transform matches a direct Fourier sum at a sample point") {
  Grid g(8);
  const auto v = random_field(g, 3, 2, false);
  const PhysicalField p = to_physical(v);
  const std::size_t idx = g.flat(3, 5, 1);
  const double x[3] = {3 * g.spacing(), 5 * g.spacing(), 1 * g.spacing()};
  for (int c = 0; c < 3; ++c) {
    Complex sum{};
    for (std::size_t i = 0; i < g.size(); ++i) {
      const WaveVector k = g.wave(i);
      sum += v.component(c)[i] * std::exp(Complex(0.0, k.k1 * x[0] + k.k2 * x[1] + k.k3 * x[2]));
    }
    CHECK(std::abs(sum.imag()) < 1e-12);
    CHECK(p.component(c)[idx] == doctest::Approx(sum.real()).epsilon(1e-12));
  }
}

TEST_CASE("Parseval: L2 norm equals physical quadrature") {
  Grid g(16);
  const auto v = random_field(g, 5, 4, false);
  const PhysicalField p = to_physical(v);
  double q = 0.0;
  for (int c = 0; c < 3; ++c)
    for (double x : p.component(c)) q += x * x;
  q *= std::pow(g.spacing(), 3);
  CHECK(l2_norm(v) * l2_norm(v) == doctest::Approx(q).epsilon(1e-12));
}

TEST_CASE("refined evaluation reproduces the coarse samples") {
  Grid g(8);
  const auto v = random_field(g, 9, 2, true);
  const PhysicalField coarse = to_physical(v);
  const PhysicalField fine = to_physical_refined(v, 2);
  CHECK(fine.grid().n() == 16);
  double err = 0.0;
  for (int i1 = 0; i1 < 8; ++i1)
    for (int i2 = 0; i2 < 8; ++i2)
      for (int i3 = 0; i3 < 8; ++i3)
        for (int c = 0; c < 3; ++c)
          err = std::max(err, std::abs(coarse.component(c)[g.flat(i1, i2, i3)] -
                                       fine.component(c)[fine.grid().flat(2 * i1, 2 * i2, 2 * i3)]));
  CHECK(err < 1e-13);
}

TEST_CASE("jacobian of a single mode matches hand differentiation") {
  Grid g(8);
  // v = (0, sin x1, 0): d_1 v_2 = cos x1
  const auto v = single_mode(g, {1, 0, 0}, 1, Complex(0.0, -0.5));
  const auto jac = physical_jacobian(v);
  double err = 0.0;
  for (int i1 = 0; i1 < 8; ++i1) {
    const auto idx = g.flat(i1, 2, 3);
    err = std::max(err, std::abs(jac[1][0][idx] - std::cos(i1 * g.spacing())));
    err = std::max(err, std::abs(jac[0][0][idx]) + std::abs(jac[1][1][idx]));
  }
  CHECK(err < 1e-14);
}

TEST_CASE("leray projection annihilates gradients and keeps solenoidal fields") {
  Grid g(8);
  // grad sin x1 = (cos x1, 0, 0)
  CHECK(leray_project(single_mode(g, {1, 0, 0}, 0, 0.5)).max_abs() == 0.0);
  // (0, cos x1, 0) is divergence-free
  const auto u = single_mode(g, {1, 0, 0}, 1, 0.5);
  CHECK(leray_project(u) == u);
}

TEST_CASE("leray projection is bitwise idempotent and divergence-free") {
  Grid g(8);
  const auto v = random_field(g, 17, 2, false);
  const auto p1 = leray_project(v);
  CHECK(leray_project(p1) == p1);
  CHECK(divergence_residual(p1) < 1e-14 * p1.max_abs());
}

TEST_CASE("2/3 rule on n = 16") {
  Grid g(16);
  CHECK_FALSE(g.retained({6, 0, 0}));
  CHECK(g.retained({5, 0, 0}));
  CHECK(g.retained({-5, 5, 5}));
  auto v = single_mode(g, {6, 0, 0}, 1, 1.0);
  CHECK(dealias(v).max_abs() == 0.0);
  auto w = single_mode(g, {5, 0, 0}, 1, 1.0);
  CHECK(dealias(w) == w);
  const auto r = random_field(g, 1, 7, false);
  const auto d = dealias(r);
  CHECK(is_dealiased(d));
  CHECK(dealias(d) == d);
}

TEST_CASE("2/3 rule cutoffs on n = 32 and n = 48") {
  CHECK(Grid(32).dealias_cutoff() == 10);
  CHECK(Grid(48).dealias_cutoff() == 15);
}

TEST_CASE("taylor-green is divergence-free and real") {
  Grid g(32);
  const auto s = taylor_green_mhd(g);
  CHECK(divergence_residual(s.u) < 1e-14);
  CHECK(divergence_residual(s.h) < 1e-14);
  CHECK(hermitian_defect(s.u) == 0.0);
  CHECK(hermitian_defect(s.h) == 0.0);
  CHECK(s.u.mode({0, 0, 0}) == Vec3c{});
  // u_1 = sin x cos y cos z has coefficient -i/8 on (1,1,1)
  CHECK(s.u.mode({1, 1, 1})[0].imag() == doctest::Approx(-0.125).epsilon(1e-14));
}

TEST_CASE("random band is deterministic and honours its magnitude law") {
  Grid g(16);
  RandomBand band{7, 4, 1.0, 0.3};
  const auto a = random_band(g, band);
  const auto b = random_band(g, band);
  CHECK(a.u == b.u);
  CHECK(a.h == b.h);
  CHECK_FALSE(a.u == a.h);
  CHECK(divergence_residual(a.u) < 1e-13);
  CHECK(hermitian_defect(a.u) == 0.0);
  for (WaveVector k : {WaveVector{1, 0, 0}, WaveVector{2, -3, 1}, WaveVector{4, 4, 4}}) {
    const Vec3c m = a.u.mode(k);
    const double mag = std::sqrt(std::norm(m[0]) + std::norm(m[1]) + std::norm(m[2]));
    CHECK(mag == doctest::Approx(std::exp(-0.3 * k.l1())).epsilon(1e-13));
  }
  CHECK(a.u.mode({5, 0, 0}) == Vec3c{});
}

TEST_CASE("random band rejects aliasing bands") {
  Grid g(16);
  CHECK_THROWS_AS(random_band(g, {1, 6, 1.0, 0.0}), InvalidArgument);
  CHECK_NOTHROW(random_band(g, {1, 5, 1.0, 0.0}));
}

TEST_CASE("orszag-tang energy matches direct quadrature") {
  Grid g(16);
  const auto s = orszag_tang_3d(g);
  // Midpoint quadrature of |u|^2 + |h|^2 on a 64^3 lattice, independent of the FFT.
  const int m = 64;
  const double dx = kTwoPi / m;
  double q = 0.0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int l = 0; l < m; ++l) {
        const double x = (i + 0.5) * dx, y = (j + 0.5) * dx, z = (l + 0.5) * dx;
        const double u1 = -2 * std::sin(y), u2 = 2 * std::sin(x);
        const double h1 = -2 * std::sin(2 * y) + std::sin(z), h2 = 2 * std::sin(x) + std::sin(z);
        q += u1 * u1 + u2 * u2 + h1 * h1 + h2 * h2;
      }
  const double quad = 0.5 * q * dx * dx * dx;
  const double spectral = 0.5 * (std::pow(l2_norm(s.u), 2) + std::pow(l2_norm(s.h), 2));
  CHECK(spectral == doctest::Approx(quad).epsilon(1e-12));
  CHECK(spectral == doctest::Approx(4.5 * kVolume).epsilon(1e-12));
}

TEST_CASE("grid mismatch is reported") {
  SpectralField a(Grid(8)), b(Grid(16));
  CHECK_THROWS_AS(inner(a, b), GridMismatch);
}
