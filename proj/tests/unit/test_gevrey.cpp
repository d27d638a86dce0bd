#include <cmath>

#include "doctest.h"
#include "gmhd/errors.hpp"
#include "gmhd/field_ops.hpp"
#include "gmhd/gevrey.hpp"
#include "gmhd/initial.hpp"
#include "gmhd/transform.hpp"
#include "helpers.hpp"

using namespace gmhd;
using testutil::single_mode;

TEST_CASE("sobolev norm of cos x1 e2") {
  Grid g(8);
  const auto v = single_mode(g, {1, 0, 0}, 1, 0.5);
  CHECK(sobolev_norm(v, 1.0) == doctest::Approx(std::pow(kTwoPi, 1.5)).epsilon(1e-15));
  CHECK(sobolev_norm(SpectralField(g), 3.0) == 0.0);
}

TEST_CASE("H^0 norm matches physical quadrature") {
  Grid g(16);
  const auto v = random_field(g, 61, 5, true);
  const PhysicalField p = to_physical(v);
  double q = 0.0;
  for (int c = 0; c < 3; ++c)
    for (double x : p.component(c)) q += x * x;
  q *= std::pow(g.spacing(), 3);
  CHECK(std::pow(sobolev_norm(v, 0.0), 2) == doctest::Approx(q).epsilon(1e-10));
}

TEST_CASE("X norm of a single axis mode") {
  Grid g(8);
  const auto w = single_mode(g, {1, 0, 0}, 1, 0.5);
  const GevreyParams p{2.0, 1.0, 0.5};
  CHECK(gevrey_norm(w, p) == doctest::Approx(std::sqrt(kVolume / 2) * std::exp(0.5)).epsilon(1e-14));
  // Y raises the exponent by 1/(2s); |k_1| = 1 leaves the value unchanged
  CHECK(gevrey_norm(w, p, GevreySpace::Y) == doctest::Approx(gevrey_norm(w, p)).epsilon(1e-15));
}

TEST_CASE("X norm at tau = 0 is the sum of Lambda_m^r norms") {
  Grid g(16);
  const auto w = random_field(g, 62, 5, true);
  double acc = 0.0;
  for (int m = 1; m <= 3; ++m) acc += std::pow(multiplier_norm(w, {m, 3.0, 0.0, 1.0}), 2);
  CHECK(gevrey_norm(w, {3.0, 1.0, 0.0}) == doctest::Approx(std::sqrt(acc)).epsilon(1e-13));
}

TEST_CASE("X norm two ways: multiplier then L2 versus weighted sum") {
  Grid g(16);
  const auto w = random_field(g, 63, 5, true);
  for (double s : {1.0, 2.0}) {
    const GevreyParams p{3.6, s, 0.4};
    double acc = 0.0;
    for (int m = 1; m <= 3; ++m) acc += std::pow(l2_norm(lambda_apply(w, {m, p.r, p.tau, s})), 2);
    CHECK(gevrey_norm(w, p) == doctest::Approx(std::sqrt(acc)).epsilon(1e-12));
  }
}

TEST_CASE("X norm is monotone in tau and in r; Y dominates X") {
  Grid g(16);
  const auto w = random_field(g, 64, 5, true);
  double prev = 0.0;
  for (double tau : {0.0, 0.1, 0.5}) {
    const double x = gevrey_norm(w, {3.0, 1.5, tau});
    CHECK(x >= prev);
    CHECK(gevrey_norm(w, {3.0, 1.5, tau}, GevreySpace::Y) >= x);
    prev = x;
  }
  CHECK(gevrey_norm(w, {2.0, 1.0, 0.2}) <= gevrey_norm(w, {3.0, 1.0, 0.2}));
}

TEST_CASE("combined norms add in quadrature") {
  Grid g(16);
  const auto st = random_band(g, {5, 4, 1.0, 0.2});
  const auto rec = compute_norms(st, {4.5, 1.0, 0.3});
  CHECK(rec.x_norm == doctest::Approx(std::hypot(gevrey_norm(curl(st.u), {4.5, 1.0, 0.3}),
                                                 gevrey_norm(curl(st.h), {4.5, 1.0, 0.3}))));
  CHECK(rec.hr == doctest::Approx(std::hypot(sobolev_norm(curl(st.u), 4.5), sobolev_norm(curl(st.h), 4.5))));
  CHECK(rec.y_norm >= rec.x_norm);
  CHECK(rec.grad_u_sup > 0.0);
}

TEST_CASE("weight overflow names the mode") {
  Grid g(16);
  const auto w = single_mode(g, {0, 0, 6}, 0, 1.0);
  try {
    gevrey_norm(w, {1.0, 1.0, 150.0});
    FAIL("expected overflow");
  } catch (const OverflowError& e) {
    CHECK(std::string(e.what()).find("6") != std::string::npos);
  }
  // Weight finite but its square is not: the scaled sum still succeeds.
  CHECK(std::isfinite(gevrey_norm(w, {1.0, 1.0, 100.0})));
}

TEST_CASE("sup gradient on hand-calculus fields") {
  Grid g(16);
  CHECK(sup_gradient(single_mode(g, {1, 0, 0}, 1, 0.5)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(sup_gradient(SpectralField(g)) == 0.0);
}

TEST_CASE("sup gradient against dense 1D sampling") {
  Grid g(32);
  auto v = single_mode(g, {1, 0, 0}, 1, 0.5);
  v += single_mode(g, {2, 0, 0}, 1, 0.25);
  double dense = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const double x = kTwoPi * i / 10000.0;
    dense = std::max(dense, std::abs(std::sin(x) + std::sin(2 * x)));
  }
  CHECK(std::abs(sup_gradient(v) - dense) < 0.01 * dense);
  CHECK(std::abs(sup_gradient(v, 2) - dense) < 0.01 * dense);
  CHECK(sup_gradient(v, 2) >= sup_gradient(v) - 1e-14);
}

TEST_CASE("sup norm of a single mode") {
  Grid g(8);
  CHECK(sup_norm(single_mode(g, {0, 1, 0}, 2, 0.5)) == doctest::Approx(1.0).epsilon(1e-14));
}

namespace {
SpectralField synthesized(const Grid& g, double tau, double s, int shells) {
  SpectralField v(g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const WaveVector k = g.wave(i);
    const int q = k.l1();
    if (q == 0 || q > shells || g.is_nyquist(k) || g.is_nyquist(-k)) continue;
    v.set(i, {std::exp(-tau * std::pow(q, 1.0 / s)), 0.0, 0.0});
  }
  return v;
}
}  // namespace

TEST_CASE("fit radius recovers synthesized decay") {
  Grid g(32);
  CHECK(fit_radius(synthesized(g, 0.8, 1.0, 10), 1.0) == doctest::Approx(0.8).epsilon(1e-6));
  CHECK(fit_radius(synthesized(g, 0.5, 2.0, 10), 2.0) == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(fit_radius(synthesized(g, 0.0, 1.0, 10), 1.0) == 0.0);
  // growth is clamped to zero
  CHECK(fit_radius(synthesized(g, -0.3, 1.0, 10), 1.0) == 0.0);
}

TEST_CASE("fit radius needs four shells") {
  Grid g(16);
  CHECK_THROWS_AS(fit_radius(synthesized(g, 0.5, 1.0, 3), 1.0), InvalidArgument);
  CHECK_NOTHROW(fit_radius(synthesized(g, 0.5, 1.0, 4), 1.0));
}

TEST_CASE("fit radius of random band data equals the decay rate") {
  Grid g(32);
  const auto st = random_band(g, {3, 10, 1.0, 0.7});
  CHECK(fit_radius(st, 1.0) == doctest::Approx(0.7).epsilon(1e-9));
}

TEST_CASE("threshold") {
  CHECK(above_threshold({4.5, 1.0, 0.0}));
  CHECK_FALSE(above_threshold({4.0, 1.0, 0.0}));
  CHECK(above_threshold({3.6, 2.0, 0.0}));
}
