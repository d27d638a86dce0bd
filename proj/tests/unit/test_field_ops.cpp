#include <cmath>

#include "doctest.h"
#include "gmhd/errors.hpp"
#include "gmhd/field_ops.hpp"
#include "gmhd/initial.hpp"
#include "gmhd/spectral_ops.hpp"
#include "gmhd/transform.hpp"
#include "helpers.hpp"

using namespace gmhd;
using testutil::max_diff;
using testutil::rel_diff;
using testutil::single_mode;

TEST_CASE("lambda symbols on single modes") {
  Grid g(16);
  const Complex c(0.3, -0.7);
  auto v = single_mode(g, {1, -2, 3}, 0, c);
  CHECK(lambda_apply(v, {0, 1.0, 0.0, 1.0}).mode({1, -2, 3})[0] == 6.0 * c);

  auto w = single_mode(g, {1, 0, 0}, 2, c);
  CHECK(lambda_apply(w, {2, 1.0, 0.0, 1.0}).max_abs() == 0.0);

  const auto e = lambda_apply(w, {1, 2.0, 0.5, 1.0}).mode({1, 0, 0})[2];
  CHECK(std::abs(e - std::exp(0.5) * c) < 1e-15);
  CHECK(std::exp(0.5) == doctest::Approx(1.648721).epsilon(1e-6));
}

TEST_CASE("r = 0 passes k_m = 0 modes through") {
  Grid g(8);
  auto w = single_mode(g, {1, 0, 0}, 2, 1.0);
  CHECK(lambda_apply(w, {2, 0.0, 0.0, 1.0}) == w);
  CHECK(lambda_apply(w, {2, 0.0, 0.7, 2.0}) == w);
}

TEST_CASE("multiplier arguments are validated") {
  Grid g(8);
  SpectralField v(g);
  CHECK_THROWS_AS(lambda_apply(v, {0, -1.0, 0.0, 1.0}), InvalidArgument);
  CHECK_THROWS_AS(lambda_apply(v, {4, 1.0, 0.0, 1.0}), InvalidArgument);
  CHECK_THROWS_AS(lambda_apply(v, {1, 1.0, -0.1, 1.0}), InvalidArgument);
  CHECK_THROWS_AS(lambda_apply(v, {1, 1.0, 0.1, 0.5}), InvalidArgument);
}

TEST_CASE("gevrey weight overflow is an error naming the mode") {
  Grid g(16);
  auto v = single_mode(g, {7, 0, 0}, 1, 1.0);
  try {
    lambda_apply(v, {1, 1.0, 200.0, 1.0});
    FAIL("expected overflow");
  } catch (const OverflowError& e) {
    CHECK(std::string(e.what()).find("7") != std::string::npos);
  }
  // The log-space exponent keeps large-but-finite weights finite.
  CHECK(std::isfinite(multiplier_symbol({7, 0, 0}, {1, 3.0, 100.0, 1.0})));
}

TEST_CASE("hilbert sign") {
  Grid g(8);
  SpectralField v(g);
  v.set_mode({0, 1, 0}, {1.0, 2.0, 3.0});
  v.set_mode({0, -1, 0}, {4.0, 5.0, 6.0});
  v.set_mode({1, 0, 0}, {7.0, 8.0, 9.0});
  const auto h = hilbert_sign(v, 2);
  CHECK(h.mode({0, 1, 0}) == Vec3c{1.0, 2.0, 3.0});
  CHECK(h.mode({0, -1, 0}) == Vec3c{-4.0, -5.0, -6.0});
  CHECK(h.mode({1, 0, 0}) == Vec3c{});
}

TEST_CASE("multipliers commute exactly") {
  Grid g(16);
  const auto v = random_field(g, 21, 5, true);
  for (int m = 1; m <= 3; ++m) {
    const MultiplierSpec spec{m, 3.6, 0.2, 2.0};
    CHECK(lambda_apply(hilbert_sign(v, m), spec) == hilbert_sign(lambda_apply(v, spec), m));
  }
}

TEST_CASE("curl of hand-calculus fields") {
  Grid g(8);
  // u = (0, cos x1, 0) -> omega = (0, 0, -sin x1)
  const auto u = single_mode(g, {1, 0, 0}, 1, 0.5);
  const auto w = curl(u);
  const auto expected = single_mode(g, {1, 0, 0}, 2, Complex(0.0, 0.5));  // -sin x = i/2 e^{ix} + c.c.
  CHECK(max_diff(w, expected) < 1e-16);
  CHECK(curl(single_mode(g, {1, 0, 0}, 0, 0.5)).max_abs() == 0.0);
  CHECK(max_diff(biot_savart(expected), u) < 1e-16);
  CHECK(biot_savart(SpectralField(g)).max_abs() == 0.0);
}

TEST_CASE("curl and biot-savart are inverse on solenoidal fields") {
  for (int n : {8, 16}) {
    Grid g(n);
    const auto w = random_field(g, 100 + n, n / 3, true);
    CHECK(rel_diff(curl(biot_savart(w)), w) < 1e-12);
    const auto v = random_field(g, 200 + n, n / 3, false);
    CHECK(rel_diff(biot_savart(curl(v)), leray_project(v)) < 1e-12);
  }
}

TEST_CASE("biot-savart rejects divergent input") {
  Grid g(8);
  CHECK_THROWS_AS(biot_savart(single_mode(g, {1, 0, 0}, 0, 1.0)), InvalidArgument);
}

TEST_CASE("advect of hand-calculus fields") {
  Grid g(16);
  // a = (sin x2, 0, 0), b = (0, sin x1, 0): (a.grad) b = (0, sin x2 cos x1, 0)
  const auto a = single_mode(g, {0, 1, 0}, 0, Complex(0.0, -0.5));
  const auto b = single_mode(g, {1, 0, 0}, 1, Complex(0.0, -0.5));
  const auto r = advect(a, b);
  SpectralField expected(g);
  // sin y cos x = (1/4i)(e^{i(x+y)} - e^{i(x-y)} + e^{i(y-x)} - e^{-i(x+y)})
  expected.set_real_mode({1, 1, 0}, {0.0, Complex(0.0, -0.25), 0.0});
  expected.set_real_mode({-1, 1, 0}, {0.0, Complex(0.0, -0.25), 0.0});
  CHECK(max_diff(r, expected) < 1e-15);
  CHECK(advect(a, SpectralField(g)).max_abs() == 0.0);
}

TEST_CASE("advection by a solenoidal field is skew") {
  Grid g(8);
  const auto a = random_field(g, 31, 2, true);
  const auto b = random_field(g, 32, 2, false);
  const double res = std::abs(inner(advect(a, b), b));
  CHECK(res < 1e-12 * l2_norm(a) * l2_norm(b) * l2_norm(b));
}

TEST_CASE("advect is bilinear") {
  Grid g(16);
  const auto a = random_field(g, 41, 5, true);
  const auto b1 = random_field(g, 42, 5, false);
  const auto b2 = random_field(g, 43, 5, false);
  CHECK(rel_diff(advect(a, b1 + b2), advect(a, b1) + advect(a, b2)) < 1e-13);
  CHECK(rel_diff(advect(a, 2.5 * b1), 2.5 * advect(a, b1)) < 1e-13);
}

TEST_CASE("sharp lambda inequalities hold per field") {
  Grid g(16);
  const auto v = random_field(g, 51, 5, true);
  const auto u = biot_savart(v);
  for (int m = 1; m <= 3; ++m)
    for (double r : {1.0, 2.5, 3.6}) {
      const double lhs = multiplier_norm(v, {m, r, 0.0, 1.0});
      const double rhs = l2_norm(lambda_apply(lambda_apply(v, {m, r - 1.0, 0.0, 1.0}), {0, 1.0, 0.0, 1.0}));
      CHECK(lhs <= rhs * (1 + 1e-14));
      const double lhs2 = multiplier_norm(u, {m, r + 1.0, 0.0, 1.0});
      const double rhs2 = l2_norm(lambda_apply(lambda_apply(u, {m, r, 0.0, 1.0}), {0, 1.0, 0.0, 1.0}));
      CHECK(lhs2 <= rhs2 * (1 + 1e-14));
    }
}

TEST_CASE("gradient norm equals the H1 seminorm") {
  Grid g(8);
  const auto v = single_mode(g, {1, 2, 0}, 2, 1.0);
  CHECK(gradient_norm(v) == doctest::Approx(std::sqrt(5.0) * l2_norm(v)).epsilon(1e-15));
}
