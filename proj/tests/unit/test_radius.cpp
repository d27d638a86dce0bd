#include <cmath>

#include "doctest.h"
#include "gmhd/errors.hpp"
#include "gmhd/radius.hpp"

using namespace gmhd;

namespace {
std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
  return v;
}
}  // namespace

TEST_CASE("radius rhs") {
  CHECK(radius_rhs(2.0, 1.0, 0.0) == -2.0);
  CHECK(radius_rhs(2.0, 0.0, 0.0) == 0.0);
  CHECK(radius_rhs(1.0, 1.0, 1.0) == -2.0);
  CHECK_THROWS_AS(radius_rhs(1.0, -1.0, 0.0), InvalidArgument);
  CHECK_THROWS_AS(radius_rhs(1.0, 0.0, -1.0), InvalidArgument);
}

TEST_CASE("bernoulli closed form solves the ODE") {
  // Oracle: e^{-1}/(1 + (1 - e^{-1})) for a = b = tau0 = t = 1.
  const double e = std::exp(-1.0);
  CHECK(bernoulli_radius(1.0, 1.0, 1.0, 1.0) == doctest::Approx(e / (2.0 - e)).epsilon(1e-15));
  CHECK(bernoulli_radius(1.0, 1.0, 1.0, 1.0) == doctest::Approx(0.225399).epsilon(1e-6));
  CHECK(bernoulli_radius(1.0, 0.0, 1.0, 1.0) == 0.5);
  // Independent check: finite-difference derivative matches the rhs.
  const double a = 0.7, b = 1.3, t = 0.4, h = 1e-5;
  const double d = (bernoulli_radius(0.9, a, b, t + h) - bernoulli_radius(0.9, a, b, t - h)) / (2 * h);
  CHECK(d == doctest::Approx(radius_rhs(bernoulli_radius(0.9, a, b, t), a, b)).epsilon(1e-8));
}

TEST_CASE("integrated radius matches the closed form for frozen coefficients") {
  for (auto [a, b] : {std::pair{1.0, 1.0}, std::pair{0.0, 1.0}, std::pair{2.5, 0.3}}) {
    const auto t = linspace(0.0, 1.0, 11);
    const auto tau = integrate_radius(t, std::vector<double>(11, a), std::vector<double>(11, b), 1.0);
    for (std::size_t i = 0; i < t.size(); ++i)
      CHECK(tau[i] == doctest::Approx(bernoulli_radius(1.0, a, b, t[i])).epsilon(1e-8));
    for (std::size_t i = 1; i < t.size(); ++i) CHECK(tau[i] < tau[i - 1]);
  }
  const auto frozen = integrate_radius({0.0, 0.5, 1.0}, {0, 0, 0}, {0, 0, 0}, 0.3);
  CHECK(frozen == std::vector<double>{0.3, 0.3, 0.3});
}

TEST_CASE("radius collapse is reported") {
  CHECK_THROWS_AS(integrate_radius({0.0, 10.0}, {800.0, 800.0}, {0.0, 0.0}, 1.0), NumericalAbort);
}

TEST_CASE("theorem minorant") {
  RadiusModel m;
  m.tau0 = 1.0;
  m.C0 = 1.0;
  m.C1 = 2.0;
  CHECK(radius_lower_bound(1.0, 0.0, m) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  m.tau0 = 0.37;
  CHECK(radius_lower_bound(0.0, 0.0, m) == 0.37);
  double prev = m.tau0;
  for (double t = 0.1; t < 2.0; t += 0.1) {
    const double v = radius_lower_bound(t, 0.5 * t, m);
    CHECK(v <= prev);
    prev = v;
  }
}

TEST_CASE("model coefficients") {
  const auto m = make_radius_model(2.0, 1.0, 0.5, 3.0, 4.0);
  CHECK(m.C0 == 2.0 * 7.0);
  CHECK(m.C1 == doctest::Approx(4.0 * 1.5 * 9.0));
  CHECK(make_radius_model(2.0, 1.0, 0.5, 3.0, 4.0, true).C1 == doctest::Approx(4.0 * 1.5 * 9.0 / 2.0));
}

TEST_CASE("H^r growth bound") {
  CHECK(hr_growth_bound(0.0, 3.0, 5.0) == 5.0);
  CHECK(hr_growth_bound(std::log(2.0), 1.0, 5.0) == doctest::Approx(10.0).epsilon(1e-15));
}

TEST_CASE("estimate C tilde") {
  const auto I = linspace(0.0, 2.0, 12);
  CHECK(estimate_C_tilde(I, std::vector<double>(12, 3.0)) == 0.0);
  std::vector<double> hr(12);
  for (int i = 0; i < 12; ++i) hr[i] = 3.0 * std::exp(2.0 * I[i]);
  CHECK(estimate_C_tilde(I, hr) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK_THROWS_AS(estimate_C_tilde({0, 1, 2}, {1, 1, 1}), InvalidArgument);
  auto flat = std::vector<double>(12, 0.0);
  CHECK_THROWS_WITH_AS(estimate_C_tilde(flat, hr), doctest::Contains("unbounded"), InvalidArgument);
}

TEST_CASE("gronwall majorant closed quadratures") {
  const auto t = linspace(0.0, 1.0, 21);
  const std::vector<double> zero(21, 0.0);
  for (double M : gronwall_majorant(t, zero, zero, 2.5, 1.0, 0.3)) CHECK(M == 2.5);
  const auto M = gronwall_majorant(t, zero, std::vector<double>(21, 2.0), 2.5, 0.7, 0.3);
  for (std::size_t i = 0; i < t.size(); ++i)
    CHECK(M[i] == doctest::Approx(2.5 + 0.7 * 1.3 * 4.0 * t[i]).epsilon(1e-14));
  // nondecreasing for nonnegative data
  std::vector<double> I(21), hr(21);
  for (int i = 0; i < 21; ++i) {
    I[i] = 0.3 * t[i] * t[i];
    hr[i] = 1.0 + std::sin(3 * t[i]);
  }
  const auto M2 = gronwall_majorant(t, I, hr, 1.0, 2.0, 0.1);
  for (std::size_t i = 1; i < M2.size(); ++i) CHECK(M2[i] >= M2[i - 1]);
}

TEST_CASE("gronwall factor scaling with power-of-two lambda is exact") {
  for (double lambda : {0.5, 2.0, 4.0, 1024.0})
    CHECK(gronwall_factor(1.7 * lambda, 0.3 / lambda) == gronwall_factor(1.7, 0.3));
}

TEST_CASE("closed form along a run agrees with the ODE integration") {
  const auto t = linspace(0.0, 0.5, 201);
  std::vector<double> grad(t.size()), hr(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    grad[i] = 1.0 + 0.5 * t[i];
    hr[i] = 2.0 + t[i] * t[i];
  }
  const double C = 0.8, tau0 = 0.4, x0 = 3.0;
  const auto I = cumulative_trapezoid(t, grad);
  const auto M = gronwall_majorant(t, I, hr, x0, C, tau0);
  const auto closed = closed_form_radius(t, I, hr, M, C, tau0);
  RadiusTracker tr(C, C, tau0);
  RadiusTracker halved(C, C, tau0, true);
  bool halved_violated = false;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto p = tr.push(t[i], grad[i], hr[i], x0);
    CHECK(p.I == doctest::Approx(I[i]).epsilon(1e-14));
    CHECK(p.M == doctest::Approx(M[i]).epsilon(1e-13));
    CHECK(p.tau == doctest::Approx(closed[i]).epsilon(1e-5));
    CHECK(p.tau >= p.lower * (1 - 1e-12));
    halved_violated = halved_violated || halved.push(t[i], grad[i], hr[i], x0).lower > p.tau;
  }
  // The halved C1 overestimates the minorant on this series.
  CHECK(halved_violated);
}

TEST_CASE("tracker starts exactly at tau0") {
  RadiusTracker tr(1.0, 1.0, 0.25);
  const auto p = tr.push(3.0, 2.0, 5.0, 7.0);
  CHECK(p.tau == 0.25);
  CHECK(p.lower == 0.25);
  CHECK_THROWS_AS(tr.push(3.0, 2.0, 5.0), InvalidArgument);
}

TEST_CASE("calibrated C keeps the radius below the fit") {
  const auto t = linspace(0.0, 0.5, 26);
  std::vector<double> grad(t.size(), 2.0), hr(t.size(), 3.0), fit(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) fit[i] = 0.5 * std::exp(-0.4 * t[i]);
  const double C = calibrate_C(t, grad, hr, fit, 0.5, 4.0);
  CHECK(C > 0.0);
  RadiusTracker tight(C, C, 0.5), loose(C * 0.99, C, 0.5);
  bool violated = false;
  for (std::size_t i = 0; i < t.size(); ++i) {
    CHECK(tight.push(t[i], grad[i], hr[i], 4.0).tau <= fit[i]);
    violated = violated || loose.push(t[i], grad[i], hr[i], 4.0).tau > fit[i];
  }
  CHECK(violated);
}
