#include <cmath>
#include <limits>
#include <string>

#include "gmhd/errors.hpp"
#include "gmhd/initial.hpp"
#include "gmhd/lab.hpp"

namespace gmhd {

namespace {

struct ModeList {
  std::vector<WaveVector> k;
  std::vector<Vec3c> v;
};

ModeList nonzero_modes(const SpectralField& f) {
  ModeList out;
  const Grid& g = f.grid();
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Vec3c a = f.at(i);
    if (a == Vec3c{}) continue;
    out.k.push_back(g.wave(i));
    out.v.push_back(a);
  }
  return out;
}

int inf_norm(const WaveVector& k) { return std::max({std::abs(k.k1), std::abs(k.k2), std::abs(k.k3)}); }

void check_band(const SpectralField& a, const SpectralField& b, const SpectralField& c) {
  const int band = std::max({band_limit(a), band_limit(b), band_limit(c)});
  if (band <= kTriadBandMax) return;
  const double modes = std::pow(2.0 * band + 1.0, 3);
  throw InvalidArgument("triad sum needs band limit <= " + std::to_string(kTriadBandMax) + ", got " +
                        std::to_string(band) + " (~" + std::to_string(static_cast<long long>(modes * modes)) +
                        " triads)");
}

Complex dot(const Vec3c& a, const Vec3c& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

// Visits every triad j + k + l = 0 with a_j, b_k, c_l all nonzero, in a fixed
// order, passing X = (a_j . k)(b_k . c_l) without the i (2 pi)^3 factor.
template <class F>
void for_each_triad(const SpectralField& a, const SpectralField& b, const SpectralField& c, F&& f) {
  require_same_grid(a, b, "triad sum");
  require_same_grid(a, c, "triad sum");
  check_band(a, b, c);
  const Grid& g = c.grid();
  const ModeList ma = nonzero_modes(a);
  const ModeList mb = nonzero_modes(b);
  for (std::size_t p = 0; p < ma.k.size(); ++p) {
    const WaveVector& j = ma.k[p];
    for (std::size_t q = 0; q < mb.k.size(); ++q) {
      const WaveVector& k = mb.k[q];
      const WaveVector l = -(j + k);
      if (!g.in_range(l)) continue;
      const Vec3c cl = c.mode(l);
      if (cl == Vec3c{}) continue;
      const Vec3c& aj = ma.v[p];
      const Complex ak = aj[0] * double(k.k1) + aj[1] * double(k.k2) + aj[2] * double(k.k3);
      f(j, k, l, ak * dot(mb.v[q], cl));
    }
  }
}

// Triad sums binned by the axis components (j_m, k_m); every weight used in
// the splittings depends on those alone.
class AxisTable {
 public:
  AxisTable(const SpectralField& a, const SpectralField& b, const SpectralField& c, int m)
      : K_(std::max({band_limit(a), band_limit(b), band_limit(c), 1})), bins_((2 * K_ + 1) * (2 * K_ + 1)) {
    for_each_triad(a, b, c, [&](const WaveVector& j, const WaveVector& k, const WaveVector&, Complex x) {
      bins_[index(j[m - 1], k[m - 1])] += x;
    });
  }

  /// i (2 pi)^3 sum over bins of X * w(|j_m|, |k_m|, |l_m|).
  template <class W>
  Complex sum(W&& w) const {
    Complex acc = 0.0;
    for (int jm = -K_; jm <= K_; ++jm) {
      for (int km = -K_; km <= K_; ++km) {
        const Complex x = bins_[index(jm, km)];
        if (x == Complex{}) continue;
        acc += x * w(std::abs(jm), std::abs(km), std::abs(jm + km));
      }
    }
    return Complex(0.0, kVolume) * acc;
  }

 private:
  std::size_t index(int jm, int km) const { return std::size_t(jm + K_) * (2 * K_ + 1) + std::size_t(km + K_); }
  int K_;
  std::vector<Complex> bins_;
};

// Scalar pieces of the axis weight; 0^p = 0 for p > 0 and 0^0 = 1.
struct Weight {
  double r, tau, s;
  double pw(int q, double p) const { return q == 0 ? (p == 0.0 ? 1.0 : 0.0) : std::pow(double(q), p); }
  double root(int q) const { return s == 1.0 ? double(q) : std::pow(double(q), 1.0 / s); }
  double ex(int q) const { return std::exp(tau * root(q)); }
  double g(int q) const { return pw(q, r) * ex(q); }
};

void finish(TriadReport& rep, bool last_is_r3 = false) {
  Complex total = 0.0;
  double mag = 0.0;
  for (const auto& [label, v] : rep.parts) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw NumericalAbort("non-finite triad part " + label);
    total += v;
    mag += std::abs(v);
  }
  rep.scale = std::max({std::abs(rep.lhs), mag, std::numeric_limits<double>::min()});
  rep.residual = std::abs(rep.lhs - total) / rep.scale;
  rep.alternate_residual = std::numeric_limits<double>::quiet_NaN();
  if (last_is_r3) {
    // flipping the sign with which the last part (R3) enters
    const Complex flipped = total - 2.0 * rep.parts.back().second;
    rep.alternate_residual = std::abs(rep.lhs - flipped) / rep.scale;
  }
}

// R1, R2 and the unsigned third sum of the exponential splitting.
struct ExpParts {
  Complex t2, r1, r2, r3;
};

ExpParts exponential_parts(const AxisTable& t, const Weight& w) {
  const double sig = 1.0 / (2.0 * w.s);
  const double r = w.r, tau = w.tau;
  ExpParts p;
  p.t2 = t.sum([&](int, int K, int L) { return w.pw(L, r) * (w.ex(L) - w.ex(K)) * w.g(L); });
  p.r1 = t.sum([&](int, int K, int L) {
    const double d = tau * (w.root(L) - w.root(K));
    return w.pw(L, r - sig) * (std::expm1(d) - d) * w.ex(K) * w.pw(L, r + sig) * w.ex(L);
  });
  p.r2 = t.sum([&](int, int K, int L) {
    return tau * (w.pw(L, r + sig) - w.pw(K, r + sig)) * w.ex(K) * w.pw(L, r + sig) * w.ex(L);
  });
  p.r3 = t.sum([&](int, int K, int L) {
    return tau * w.root(K) * (w.pw(L, r - sig) - w.pw(K, r - sig)) * w.ex(K) * w.pw(L, r + sig) * w.ex(L);
  });
  return p;
}

TriadReport three_way(const SpectralField& a, const SpectralField& b, const SpectralField& c,
                      const MultiplierSpec& spec) {
  const Weight w{spec.r, spec.tau, spec.s};
  const SpectralField ga = lambda_apply(a, spec);
  const SpectralField gb = lambda_apply(b, spec);
  const SpectralField gc = lambda_apply(c, spec);
  TriadReport rep;
  rep.lhs = trilinear_transform(a, b, c, spec) - inner(advect(ga, b), gc) - inner(advect(a, gb), gc);
  const AxisTable t(a, b, c, spec.m);
  rep.parts = {
      {"S1", t.sum([&](int J, int K, int L) { return (w.pw(L, w.r) - w.pw(J, w.r)) * (w.ex(L) - w.ex(K)) * w.g(L); })},
      {"S2", t.sum([&](int J, int K, int L) {
         return (w.pw(L, w.r) - w.pw(K, w.r) - w.pw(J, w.r)) * w.ex(K) * w.g(L);
       })},
      {"S3", t.sum([&](int J, int, int L) { return w.pw(J, w.r) * (w.ex(L) - w.ex(J)) * w.g(L); })},
  };
  finish(rep);
  return rep;
}

}  // namespace

int band_limit(const SpectralField& v) {
  const Grid& g = v.grid();
  int band = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (v.at(i) != Vec3c{}) band = std::max(band, inf_norm(g.wave(i)));
  }
  return band;
}

Grid lab_grid(int kmax) {
  if (kmax < 1) throw InvalidArgument("lab_grid needs kmax >= 1");
  int n = 8;
  while ((n - 1) / 3 < kmax) n *= 2;
  return Grid(n);
}

Complex trilinear_bruteforce(const SpectralField& a, const SpectralField& b, const SpectralField& c,
                             const MultiplierSpec& spec) {
  validate(spec);
  const Grid& g = c.grid();
  std::vector<double> weight(g.size(), 0.0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (c.at(i) == Vec3c{}) continue;
    const double s = multiplier_symbol(g.wave(i), spec);
    weight[i] = s * s;
  }
  Complex acc = 0.0;
  for_each_triad(a, b, c, [&](const WaveVector&, const WaveVector&, const WaveVector& l, Complex x) {
    acc += x * weight[g.flat_of(l)];
  });
  return Complex(0.0, kVolume) * acc;
}

Complex trilinear_transform(const SpectralField& a, const SpectralField& b, const SpectralField& c,
                            const MultiplierSpec& spec) {
  const SpectralField gc = lambda_apply(c, spec);
  return inner(advect(a, b), lambda_apply(gc, spec));
}

double cancellation_residual(const SpectralField& u, const SpectralField& w, const MultiplierSpec& spec) {
  const SpectralField wt = lambda_apply(w, spec);
  const double nu = l2_norm(u);
  const double nw = l2_norm(wt);
  if (nu == 0.0 || nw == 0.0) return 0.0;
  return std::abs(inner(advect(u, wt), wt)) / (nu * nw * nw);
}

LabFields lab_fields(std::uint64_t seed, int kmax, double decay) {
  const Grid g = lab_grid(kmax);
  SpectralField u = random_field(g, seed, kmax, true, 1.0, decay);
  SpectralField h = random_field(g, seed ^ 0x9e3779b97f4a7c15ULL, kmax, true, 1.0, decay);
  SpectralField w = curl(u);
  SpectralField j = curl(h);
  return {std::move(u), std::move(h), std::move(w), std::move(j)};
}

const char* name(TriadIdentity id) {
  switch (id) {
    case TriadIdentity::transport_split: return "transport_split";
    case TriadIdentity::exponential_split: return "exponential_split";
    case TriadIdentity::exponential_split_signed: return "exponential_split_signed";
    case TriadIdentity::stretching_split: return "stretching_split";
    case TriadIdentity::coupling_split: return "coupling_split";
    case TriadIdentity::paired_transport: return "paired_transport";
  }
  return "?";
}

TriadIdentity parse_triad_identity(const std::string& tag) {
  for (TriadIdentity id : all_triad_identities()) {
    if (tag == name(id)) return id;
  }
  throw InvalidArgument("unknown identity tag '" + tag + "'");
}

std::vector<TriadIdentity> all_triad_identities() {
  return {TriadIdentity::transport_split,  TriadIdentity::exponential_split, TriadIdentity::exponential_split_signed,
          TriadIdentity::stretching_split, TriadIdentity::coupling_split,    TriadIdentity::paired_transport};
}

TriadReport triad_decomposition_check(const LabFields& f, const MultiplierSpec& spec, TriadIdentity which) {
  validate(spec);
  if (spec.m < 1) throw InvalidArgument("triad identities need a single axis m = 1..3");
  const Weight w{spec.r, spec.tau, spec.s};
  TriadReport rep;
  switch (which) {
    case TriadIdentity::transport_split: {
      const SpectralField gj = lambda_apply(f.j, spec);
      rep.lhs = trilinear_transform(f.u, f.j, f.j, spec) - inner(advect(f.u, gj), gj);
      const AxisTable t(f.u, f.j, f.j, spec.m);
      rep.parts = {
          {"T1", t.sum([&](int, int K, int L) { return (w.pw(L, w.r) - w.pw(K, w.r)) * w.ex(K) * w.g(L); })},
          {"T2", t.sum([&](int, int K, int L) { return w.pw(L, w.r) * (w.ex(L) - w.ex(K)) * w.g(L); })},
      };
      finish(rep);
      break;
    }
    case TriadIdentity::exponential_split: {
      const ExpParts p = exponential_parts(AxisTable(f.u, f.j, f.j, spec.m), w);
      rep.lhs = p.t2;
      rep.parts = {{"R1", p.r1}, {"R2", p.r2}, {"-R3", -p.r3}};
      finish(rep, true);
      break;
    }
    case TriadIdentity::exponential_split_signed: {
      const ExpParts p = exponential_parts(AxisTable(f.h, f.omega, f.j, spec.m), w);
      rep.lhs = p.t2;
      rep.parts = {{"R1", p.r1}, {"R2", p.r2}, {"R3", -p.r3}};
      finish(rep, true);
      break;
    }
    case TriadIdentity::stretching_split:
      rep = three_way(f.j, f.u, f.j, spec);
      break;
    case TriadIdentity::coupling_split:
      rep = three_way(f.j, f.h, f.omega, spec);
      break;
    case TriadIdentity::paired_transport: {
      const SpectralField gj = lambda_apply(f.j, spec);
      const SpectralField gw = lambda_apply(f.omega, spec);
      rep.lhs = trilinear_transform(f.h, f.j, f.omega, spec) + trilinear_transform(f.h, f.omega, f.j, spec) -
                inner(advect(f.h, gj), gw) - inner(advect(f.h, gw), gj);
      const auto diff = [&](int, int K, int L) { return (w.g(L) - w.g(K)) * w.g(L); };
      rep.parts = {{"T_hJw", AxisTable(f.h, f.j, f.omega, spec.m).sum(diff)},
                   {"T_hwJ", AxisTable(f.h, f.omega, f.j, spec.m).sum(diff)}};
      finish(rep);
      break;
    }
  }
  return rep;
}

}  // namespace gmhd
