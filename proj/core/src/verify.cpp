#include "gmhd/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "gmhd/errors.hpp"
#include "gmhd/initial.hpp"
#include "gmhd/lab.hpp"
#include "gmhd/solver.hpp"

namespace gmhd {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

CheckRecord below(std::string name, std::string kind, double value, double limit) {
  return {std::move(name), std::move(kind), value, limit, value < limit, true};
}

CheckRecord above(std::string name, std::string kind, double value, double limit) {
  return {std::move(name), std::move(kind), value, limit, value > limit, true};
}

CheckRecord none_violated(std::string name, const InequalityReport& r) {
  return {std::move(name), "violations", double(r.violations), 0.0, r.checked > 0 && r.violations == 0, true};
}

CheckRecord measured(std::string name, std::string kind, double value) {
  return {std::move(name), std::move(kind), value, kNaN, std::isfinite(value), false};
}

std::string fmt(const char* pattern, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, x);
  return buf;
}

void check_options(const VerifyOptions& opt) {
  if (opt.size < 1 || opt.size > kTriadBandMax) {
    throw InvalidArgument("size must be in 1.." + std::to_string(kTriadBandMax) + ", got " + std::to_string(opt.size));
  }
  if (opt.range < 1 || opt.range > 200) throw InvalidArgument("range must be in 1..200, got " + std::to_string(opt.range));
  if (opt.field_sets < 1 || opt.operator_samples < 1) throw InvalidArgument("sample counts must be positive");
}

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300}); }

}  // namespace

std::vector<CheckRecord> verify_identities(const VerifyOptions& opt) {
  check_options(opt);
  std::vector<CheckRecord> out;

  // two weights per field set, cycling the axis
  std::vector<double> worst(all_triad_identities().size(), 0.0);
  double worst_alt = std::numeric_limits<double>::infinity();
  double worst_oracle = 0.0;
  for (int i = 0; i < opt.field_sets; ++i) {
    const std::uint64_t seed = opt.seed + std::uint64_t(i);
    const LabFields f = lab_fields(seed, opt.size);
    const MultiplierSpec specs[] = {{1 + i % 3, 3.0, 0.2, 1.0}, {1 + (i + 1) % 3, 4.5, 0.1, 2.0}};
    for (const MultiplierSpec& spec : specs) {
      std::size_t n = 0;
      for (TriadIdentity id : all_triad_identities()) {
        const TriadReport rep = triad_decomposition_check(f, spec, id);
        worst[n] = std::max(worst[n], rep.residual);
        if (!std::isnan(rep.alternate_residual)) worst_alt = std::min(worst_alt, rep.alternate_residual);
        ++n;
      }
    }
    if (i < 10) {
      const MultiplierSpec w{i % 4, 2.0 + 0.5 * (i % 3), 0.1 * (i % 3), 1.0 + (i % 2)};
      worst_oracle = std::max(worst_oracle, rel(trilinear_bruteforce(f.u, f.j, f.omega, w),
                                                trilinear_transform(f.u, f.j, f.omega, w)));
    }
  }
  std::size_t n = 0;
  for (TriadIdentity id : all_triad_identities()) {
    out.push_back(below(std::string("identity.") + name(id), "residual", worst[n++], 1e-11));
  }
  // the other sign of the third exponential term must not close
  out.push_back(above("identity.opposite_sign", "residual", worst_alt, 1e-3));

  ScalarSuiteReport scalar = scalar_inequality_suite(opt.range, {1.0});
  out.push_back(none_violated("identity.abs_difference", scalar.abs_identity));

  out.push_back(below("trilinear.oracle", "residual", worst_oracle, 1e-10));

  const Grid g = lab_grid(opt.size);
  double worst_cancel = 0.0;
  double weakest_control = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 50; ++i) {
    const std::uint64_t seed = opt.seed + 1000 + std::uint64_t(i);
    const SpectralField u = random_field(g, seed, opt.size, true, 1.0, 0.2);
    const SpectralField w = random_field(g, seed + 500, opt.size, false, 1.0, 0.2);
    for (int m = 1; m <= 3; ++m) {
      for (double r : {3.0, 3.6}) {
        for (double tau : {0.0, 0.2}) {
          for (double s : {1.0, 2.0}) worst_cancel = std::max(worst_cancel, cancellation_residual(u, w, {m, r, tau, s}));
        }
      }
    }
    if (i < 10) {
      const SpectralField bad = random_field(g, seed, opt.size, false, 1.0, 0.2);
      weakest_control = std::min(weakest_control, cancellation_residual(bad, w, {1 + i % 3, 3.0, 0.2, 1.0}));
    }
  }
  out.push_back(below("cancellation.solenoidal", "residual", worst_cancel, 1e-12));
  out.push_back(above("cancellation.compressible_control", "residual", weakest_control, 1e-6));
  return out;
}

std::vector<CheckRecord> verify_inequalities(const VerifyOptions& opt) {
  check_options(opt);
  std::vector<CheckRecord> out;

  const std::vector<double> s_values{1.0, 1.5, 2.0, 3.0};
  const ScalarSuiteReport sc = scalar_inequality_suite(opt.range, s_values);
  out.push_back(none_violated("scalar.abs_difference", sc.abs_identity));
  out.push_back(none_violated("scalar.root_difference", sc.root_difference));
  out.push_back(none_violated("scalar.triangle", sc.triangle));
  out.push_back(measured("scalar.root_ratio", "empirical_C", sc.root_ratio.empirical_C));
  for (std::size_t i = 0; i < sc.mean_value.size(); ++i) {
    const auto& [p, rep] = sc.mean_value[i];
    out.push_back(measured("scalar.mean_value" + fmt(".s=%g", s_values[i / 3]) + fmt(".p=%g", p), "empirical_C",
                           rep.empirical_C));
  }

  const Grid g = lab_grid(std::min(opt.size, 3));
  std::vector<SpectralField> samples;
  for (int i = 0; i < opt.operator_samples; ++i) {
    samples.push_back(random_field(g, opt.seed + std::uint64_t(i), std::min(opt.size, 3), true, 1.0, 0.2));
  }
  std::vector<MultiplierSpec> specs;
  for (int m = 1; m <= 3; ++m) {
    specs.push_back({m, 3.0, 0.2, 1.0});
    specs.push_back({m, 4.5, 0.1, 2.0});
  }
  const OperatorSuiteReport op = operator_inequality_suite(samples, specs);
  out.push_back(none_violated("operator.sharp_chains", op.sharp));
  // analytic ceilings: |k|_1 <= 3 |k|_inf, and |k|_1 / |k| <= sqrt 3
  out.push_back(below("operator.lift_constant", "empirical_C", op.lift_C.empirical_C, 3.0 + 1e-12));
  out.push_back(below("operator.biot_savart_constant", "empirical_C", op.biot_savart_C.empirical_C,
                      std::sqrt(3.0) + 1e-12));

  const GevreyParams p{3.6, 1.0, 0.1};
  for (NonlinearBound b : {NonlinearBound::vorticity, NonlinearBound::current, NonlinearBound::paired_field,
                           NonlinearBound::field_stretching}) {
    ConstantSampling first;
    first.seed = opt.seed;
    first.samples = std::size_t(opt.constant_samples);
    ConstantSampling second = first;
    second.seed = opt.seed + 1000;
    const ConstantEstimate a = estimate_constant(b, p, first);
    const ConstantEstimate c = estimate_constant(b, p, second);
    out.push_back(measured(std::string("constant.") + name(b), "empirical_C", std::max(a.empirical_C, c.empirical_C)));
    const double spread = std::max(a.empirical_C, c.empirical_C) / std::min(a.empirical_C, c.empirical_C);
    out.push_back(measured(std::string("constant.") + name(b) + ".batch_ratio", "ratio", spread));
  }
  return out;
}

std::vector<CheckRecord> verify_balance(const VerifyOptions&) {
  std::vector<CheckRecord> out;
  const Grid g(32);
  MHDState s = taylor_green_mhd(g);
  for (int i = 0; i < 10; ++i) s = step_rk4(s, 0.05);
  for (double tau_dot : {0.0, -0.2}) {
    const BalanceConvergence c = energy_balance_convergence(s, {1, 3.0, 0.1, 1.0}, {1e-2, 5e-3, 2.5e-3}, tau_dot);
    const std::string tag = fmt("balance.tau_dot=%g", tau_dot);
    out.push_back({tag + ".order", "order", c.min_order, 1.9, c.min_order >= 1.9, true});
    const BalanceReport& last = c.steps.back();
    out.push_back(measured(tag + ".literal_defect_ratio", "ratio", last.literal_defect / last.defect));
  }
  return out;
}

std::vector<CheckRecord> verify_suite(const std::string& suite, const VerifyOptions& opt) {
  if (suite == "identities") return verify_identities(opt);
  if (suite == "inequalities") return verify_inequalities(opt);
  if (suite == "balance") return verify_balance(opt);
  if (suite == "all") {
    std::vector<CheckRecord> out = verify_identities(opt);
    for (auto* f : {&verify_inequalities, &verify_balance}) {
      auto more = f(opt);
      out.insert(out.end(), more.begin(), more.end());
    }
    return out;
  }
  throw InvalidArgument("unknown suite '" + suite + "' (identities, inequalities, balance, all)");
}

bool all_exact_pass(const std::vector<CheckRecord>& records) {
  return std::all_of(records.begin(), records.end(), [](const CheckRecord& r) { return !r.exact || r.pass; });
}

}  // namespace gmhd
