#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <string>

#include "gmhd/errors.hpp"
#include "gmhd/initial.hpp"
#include "gmhd/lab.hpp"

namespace gmhd {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Accumulates lhs <= rhs checks (with a relative roundoff allowance) and,
// when estimating, the sup of lhs / rhs.
class Tally {
 public:
  explicit Tally(bool estimating = false) { rep_.empirical_C = estimating ? 0.0 : kNaN; rep_.worst_margin = kInf; }

  void bound(double lhs, double rhs, double slack = 1e-12) {
    ++rep_.checked;
    const double margin = (rhs - lhs) / std::max(std::abs(rhs), 1.0);
    rep_.worst_margin = std::min(rep_.worst_margin, margin);
    if (lhs > rhs + slack * std::max(std::abs(rhs), 1.0)) ++rep_.violations;
  }

  void exact(bool ok) {
    ++rep_.checked;
    rep_.worst_margin = std::min(rep_.worst_margin, 0.0);
    if (!ok) ++rep_.violations;
  }

  void ratio(double lhs, double rhs) {
    if (lhs == 0.0) return;
    ++rep_.checked;
    const double c = rhs > 0.0 ? lhs / rhs : kInf;
    if (!std::isfinite(c)) ++rep_.violations;
    rep_.empirical_C = std::max(rep_.empirical_C, c);
  }

  InequalityReport done() const {
    InequalityReport r = rep_;
    if (r.checked == 0) r.worst_margin = 0.0;
    return r;
  }

 private:
  static constexpr double kInf = std::numeric_limits<double>::infinity();
  InequalityReport rep_;
};

int sgn(int x) { return (x > 0) - (x < 0); }

double pw(double q, double p) { return q == 0.0 ? (p == 0.0 ? 1.0 : 0.0) : std::pow(q, p); }

// sqrt((2 pi)^3 sum_k sym(k)^2 |v_k|^2)
double symbol_norm(const SpectralField& v, const std::function<double(const WaveVector&)>& sym) {
  const Grid& g = v.grid();
  double acc = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Vec3c a = v.at(i);
    const double mag2 = std::norm(a[0]) + std::norm(a[1]) + std::norm(a[2]);
    if (mag2 == 0.0) continue;
    const double w = sym(g.wave(i));
    acc += w * w * mag2;
  }
  return std::sqrt(kVolume * acc);
}

struct Symbols {
  int m;
  double r, tau, s;
  double e(const WaveVector& k) const {
    const double q = std::abs(k[m - 1]);
    return std::exp(tau * std::pow(q, 1.0 / s));
  }
  double axis(const WaveVector& k, double p) const { return pw(std::abs(k[m - 1]), p) * e(k); }
  // Lambda Lambda_m^p e
  double lifted(const WaveVector& k, double p) const { return k.l1() * axis(k, p); }
  // grad H_m Lambda_m^p e
  double grad_hilbert(const WaveVector& k, double p) const {
    return k[m - 1] == 0 ? 0.0 : std::sqrt(double(k.norm2())) * axis(k, p);
  }
};

void sharp_chains(Tally& t, const SpectralField& w, const SpectralField& v, const Symbols& sy) {
  for (const double tau : {sy.tau, 0.0}) {
    const Symbols s{sy.m, sy.r, tau, sy.s};
    const double lift = symbol_norm(w, [&](const WaveVector& k) { return s.lifted(k, s.r - 1.0); });
    t.bound(symbol_norm(w, [&](const WaveVector& k) { return s.axis(k, s.r); }), lift);
    t.bound(symbol_norm(w, [&](const WaveVector& k) { return s.grad_hilbert(k, s.r - 1.0); }), lift);
    t.bound(symbol_norm(v, [&](const WaveVector& k) { return s.axis(k, s.r + 1.0); }),
            symbol_norm(v, [&](const WaveVector& k) { return s.lifted(k, s.r); }));
  }
}

// Single real modes: the first chain is an equality exactly on the m axis.
void axis_modes(Tally& t, const Grid& g, const Symbols& sy) {
  const int q = std::max(1, g.dealias_cutoff() / 2);
  for (int other = 0; other <= 1; ++other) {
    std::array<int, 3> c{0, 0, 0};
    c[sy.m - 1] = q;
    c[sy.m % 3] = other;
    const WaveVector k{c[0], c[1], c[2]};
    SpectralField w(g);
    w.set_real_mode(k, {Complex(1.0, 0.5), Complex(-0.25, 1.0), Complex(0.5, 0.0)});
    const double lhs = symbol_norm(w, [&](const WaveVector& x) { return sy.axis(x, sy.r); });
    const double rhs = symbol_norm(w, [&](const WaveVector& x) { return sy.lifted(x, sy.r - 1.0); });
    if (other == 0) {
      t.exact(std::abs(lhs - rhs) <= 1e-13 * rhs);
    } else {
      t.exact(lhs < rhs * (1.0 - 1e-13));
    }
  }
}

std::string dump(std::uint64_t seed, const MHDState& s) {
  std::ostringstream os;
  os.precision(17);
  os << "seed " << seed << "\n";
  const auto put = [&](const char* label, const SpectralField& f) {
    const Grid& g = f.grid();
    for (std::size_t i = 0; i < g.size(); ++i) {
      const Vec3c a = f.at(i);
      if (a == Vec3c{}) continue;
      const WaveVector k = g.wave(i);
      os << label << " " << k.k1 << " " << k.k2 << " " << k.k3;
      for (const Complex& c : a) os << " " << c.real() << " " << c.imag();
      os << "\n";
    }
  };
  put("u", s.u);
  put("h", s.h);
  return os.str();
}

}  // namespace

ScalarSuiteReport scalar_inequality_suite(int range, const std::vector<double>& s_values, double r) {
  if (range < 1 || range > 200) throw InvalidArgument("scalar sweep range must be 1..200");
  for (double s : s_values) {
    if (!(s >= 1.0)) throw InvalidArgument("Gevrey index s must be >= 1");
  }
  Tally identity, root_diff, root_ratio(true), triangle;
  ScalarSuiteReport rep;
  for (int j = -range; j <= range; ++j) {
    for (int k = -range; k <= range; ++k) {
      const int l = -j - k;
      if (k == 0 || l == 0) continue;
      const int chi = sgn(k + j) * sgn(k) == -1 ? 1 : 0;
      identity.exact(std::abs(l) - std::abs(k) == j * sgn(k) + 2 * (j + k) * sgn(j) * chi);
    }
  }
  for (double s : s_values) {
    const double sig = 1.0 / (2.0 * s);
    std::vector<std::pair<double, Tally>> mv;
    for (double p : {r, r - sig, r + sig}) mv.emplace_back(p, Tally(true));
    for (int j = -range; j <= range; ++j) {
      for (int k = -range; k <= range; ++k) {
        const int l = -j - k;
        if (k == 0 || l == 0) continue;
        const double J = std::abs(j), K = std::abs(k), L = std::abs(l);
        const double d = std::abs(std::pow(L, 1.0 / s) - std::pow(K, 1.0 / s));
        root_diff.bound(d, std::pow(J, 1.0 / s));
        if (j != 0) root_ratio.ratio(d * (std::pow(L, 1.0 - 1.0 / s) + std::pow(K, 1.0 - 1.0 / s)), J);
        for (auto& [p, t] : mv) {
          const double lhs = std::abs(std::pow(L, p) - std::pow(K, p) - p * (L - K) * std::pow(K, p - 1.0));
          // at j = 0 both sides vanish
          if (j != 0) t.ratio(lhs, J * J * (std::pow(J, p - 2.0) + std::pow(K, p - 2.0)));
        }
        const double a = pw(J, sig), b = pw(K, sig), c = pw(L, sig);
        triangle.bound(c, a + b);
        triangle.bound(b, a + c);
        triangle.bound(a, b + c);
      }
    }
    for (auto& [p, t] : mv) rep.mean_value.emplace_back(p, t.done());
  }
  rep.abs_identity = identity.done();
  rep.root_difference = root_diff.done();
  rep.root_ratio = root_ratio.done();
  rep.triangle = triangle.done();
  return rep;
}

OperatorSuiteReport operator_inequality_suite(const std::vector<SpectralField>& samples,
                                              const std::vector<MultiplierSpec>& specs) {
  Tally sharp, lift(true), bs(true);
  for (const MultiplierSpec& spec : specs) {
    validate(spec);
    if (spec.m < 1 || spec.r < 1.0) throw InvalidArgument("operator chains need m = 1..3 and r >= 1");
  }
  for (const SpectralField& w : samples) {
    const SpectralField v = biot_savart(w);
    for (const MultiplierSpec& spec : specs) {
      const Symbols sy{spec.m, spec.r, spec.tau, spec.s};
      sharp_chains(sharp, w, v, sy);
      const double x = gevrey_norm(w, GevreyParams{spec.r, spec.s, spec.tau});
      lift.ratio(symbol_norm(w, [&](const WaveVector& k) { return sy.lifted(k, sy.r - 1.0); }), x);
      bs.ratio(symbol_norm(v, [&](const WaveVector& k) { return sy.lifted(k, sy.r); }), x);
    }
  }
  if (!samples.empty()) {
    for (const MultiplierSpec& spec : specs) axis_modes(sharp, samples.front().grid(), {spec.m, spec.r, spec.tau, spec.s});
  }
  return {sharp.done(), lift.done(), bs.done()};
}

const char* name(NonlinearBound b) {
  switch (b) {
    case NonlinearBound::vorticity: return "vorticity";
    case NonlinearBound::current: return "current";
    case NonlinearBound::paired_field: return "paired_field";
    case NonlinearBound::field_stretching: return "field_stretching";
  }
  return "?";
}

NonlinearBound parse_nonlinear_bound(const std::string& tag) {
  for (NonlinearBound b : {NonlinearBound::vorticity, NonlinearBound::current, NonlinearBound::paired_field,
                           NonlinearBound::field_stretching}) {
    if (tag == name(b)) return b;
  }
  throw InvalidArgument("unknown bound '" + tag + "'");
}

ConstantEstimate estimate_constant(NonlinearBound bound, const GevreyParams& p, const ConstantSampling& cs) {
  validate(p);
  if (cs.samples < 50) throw InvalidArgument("estimate_constant needs at least 50 samples");
  const Grid g(cs.n);
  const double tau = p.tau;
  ConstantEstimate out;
  for (std::size_t i = 0; i < cs.samples; ++i) {
    const std::uint64_t seed = cs.seed + i;
    MHDState s = random_band(g, {seed, cs.kmax, 1.0, cs.decay});
    s.u *= cs.u_scale;
    s.h *= cs.h_scale;
    const SpectralField w = curl(s.u);
    const SpectralField j = curl(s.h);
    const double gu = sup_gradient(s.u, 2), gh = sup_gradient(s.h, 2);
    const double hw = sobolev_norm(w, p.r), hj = sobolev_norm(j, p.r);
    const double xw = gevrey_norm(w, p), xj = gevrey_norm(j, p);
    const double yw = gevrey_norm(w, p, GevreySpace::Y), yj = gevrey_norm(j, p, GevreySpace::Y);
    const double hP = std::hypot(hw, hj), xP = std::hypot(xw, xj), yP = std::hypot(yw, yj);

    double rhs = 0.0;
    switch (bound) {
      case NonlinearBound::vorticity:
        rhs = (tau * gu + tau * tau * (hw + xw)) * yw * yw + (gu * xw + (1 + tau) * hw * hw) * xw;
        break;
      case NonlinearBound::current:
        rhs = (tau * gu + tau * tau * (hP + xP)) * yP * yj + (gu * xj + gh * xw + (1 + tau) * hP * hP) * xj;
        break;
      case NonlinearBound::paired_field:
        rhs = (tau * gh + tau * tau * (hP + xP)) * yP * yP + (gh * xP + (1 + tau) * hP * hP) * xP;
        break;
      case NonlinearBound::field_stretching:
        rhs = (gu + gh) * xP * xP + tau * hP * hP * xP + tau * tau * (hP + xP) * yP * yP;
        break;
    }

    double lhs = 0.0;
    for (int m = 1; m <= 3; ++m) {
      const MultiplierSpec weight{m, p.r, tau, p.s};
      const auto T = [&](const SpectralField& a, const SpectralField& b, const SpectralField& c) {
        return trilinear_transform(a, b, c, weight).real();
      };
      double v = 0.0;
      switch (bound) {
        case NonlinearBound::vorticity: v = std::abs(T(s.u, w, w)) + std::abs(T(w, s.u, w)); break;
        case NonlinearBound::current: v = std::abs(T(s.u, j, j)) + std::abs(T(j, s.u, j)); break;
        case NonlinearBound::paired_field: v = std::abs(T(s.h, j, w) + T(s.h, w, j)); break;
        case NonlinearBound::field_stretching: v = std::abs(T(j, s.h, w)) + std::abs(T(w, s.h, j)); break;
      }
      lhs = std::max(lhs, v);
    }

    if (!std::isfinite(lhs) || !std::isfinite(rhs)) throw NumericalAbort("non-finite bound sample at seed " + std::to_string(seed));
    if (rhs == 0.0) {
      if (lhs == 0.0) {
        ++out.skipped;
        continue;
      }
      out.empirical_C = std::numeric_limits<double>::infinity();
      if (out.counterexample.empty()) out.counterexample = dump(seed, s);
      ++out.used;
      continue;
    }
    ++out.used;
    out.empirical_C = std::max(out.empirical_C, lhs / rhs);
  }
  return out;
}

}  // namespace gmhd
