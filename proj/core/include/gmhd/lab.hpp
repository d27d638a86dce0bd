#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gmhd/field_ops.hpp"
#include "gmhd/gevrey.hpp"
#include "gmhd/spectral_field.hpp"

namespace gmhd {

/// Largest |k|_inf over modes with nonzero content (0 for a zero field).
int band_limit(const SpectralField& v);

/// Smallest power-of-two grid on which every product of two fields with band
/// limit kmax is computed without aliasing on the modes |k_i| <= kmax.
Grid lab_grid(int kmax);

/// Brute-force limit on the band of trilinear inputs.
inline constexpr int kTriadBandMax = 6;

/// <a.grad b, W c> with W = symbol(spec)^2, as the direct triad sum
///   i (2 pi)^3 sum_{j+k+l=0} (a_j . k)(b_k . c_l) W(l).
/// Real fields assumed (c_l = conj(c_{-l})).  Throws InvalidArgument with a
/// triad-count estimate when a band limit exceeds kTriadBandMax.
Complex trilinear_bruteforce(const SpectralField& a, const SpectralField& b, const SpectralField& c,
                             const MultiplierSpec& spec);

/// Same form through the pseudo-spectral product: inner(advect(a, b), W c).
Complex trilinear_transform(const SpectralField& a, const SpectralField& b, const SpectralField& c,
                            const MultiplierSpec& spec);

/// |<u.grad w~, w~>| / (|u| |w~|^2) with w~ = lambda_apply(w, spec); 0 when
/// either factor vanishes.  Roundoff-small for solenoidal u.
double cancellation_residual(const SpectralField& u, const SpectralField& w, const MultiplierSpec& spec);

/// Velocity, field and their curls.
struct LabFields {
  SpectralField u;
  SpectralField h;
  SpectralField omega;
  SpectralField j;
};

/// Seeded random solenoidal pair on lab_grid(kmax) with magnitudes decaying
/// like exp(-decay |k|_1).
LabFields lab_fields(std::uint64_t seed, int kmax, double decay = 0.3);

/// Exact splittings of commutator-type trilinear forms.  g denotes the
/// single-axis weight |q|^r e^{tau q^{1/s}}, W = g^2.
enum class TriadIdentity {
  /// <u.grad J, W J> - <u.grad gJ, gJ> = T1 + T2 (power part / exponential part).
  transport_split,
  /// T2 (of transport_split) = R1 + R2 - R3 with R3 the unsigned third sum.
  exponential_split,
  /// T2 for (h, omega, J) = R1 + R2 + R3 with R3 carrying the minus sign.
  exponential_split_signed,
  /// <J.grad u, W J> - <gJ.grad u, gJ> - <J.grad gu, gJ> = S1 + S2 + S3.
  stretching_split,
  /// The same three-way split for (J, h, omega).
  coupling_split,
  /// <h.grad J, W omega> + <h.grad omega, W J> minus the weighted pair
  /// = T(h, J, omega) + T(h, omega, J).
  paired_transport,
};

const char* name(TriadIdentity id);
/// Throws InvalidArgument naming the tag when unknown.
TriadIdentity parse_triad_identity(const std::string& tag);
std::vector<TriadIdentity> all_triad_identities();

struct TriadReport {
  Complex lhs;
  std::vector<std::pair<std::string, Complex>> parts;
  double residual = 0.0;
  double scale = 0.0;
  /// Residual under the opposite sign of R3 (exponential splits only; NaN
  /// otherwise).  Exactly one of the two conventions closes.
  double alternate_residual = 0.0;
};

/// Left sides go through the transform path where they are inner products
/// of weighted fields, sub-terms are direct triad sums.  spec.m must be 1..3.
TriadReport triad_decomposition_check(const LabFields& f, const MultiplierSpec& spec, TriadIdentity which);

struct InequalityReport {
  std::size_t checked = 0;
  std::size_t violations = 0;
  /// min over checks of (rhs - lhs) / max(|rhs|, 1); negative on violation.
  double worst_margin = 0.0;
  /// sup lhs / rhs-structure where a constant is being estimated; NaN otherwise.
  double empirical_C = 0.0;
};

/// Exhaustive integer sweep over |j|, |k| <= range with l = -j - k, k != 0,
/// l != 0 (one axis component each).
struct ScalarSuiteReport {
  /// |l| - |k| = j sgn k + 2 (j + k) sgn j [sgn(k + j) sgn k = -1], exact.
  InequalityReport abs_identity;
  /// ||l|^{1/s} - |k|^{1/s}| <= |j|^{1/s}.
  InequalityReport root_difference;
  /// ||l|^{1/s} - |k|^{1/s}| (|l|^{1-1/s} + |k|^{1-1/s}) / |j|, constant only.
  InequalityReport root_ratio;
  /// |l^p - k^p - p(l - k) k^{p-1}| <= C j^2 (j^{p-2} + k^{p-2}) for
  /// p in {r, r - 1/(2s), r + 1/(2s)}, in that order per s.
  std::vector<std::pair<double, InequalityReport>> mean_value;
  /// |x|^{1/(2s)} <= |y|^{1/(2s)} + |z|^{1/(2s)} for every labelling of the triad.
  InequalityReport triangle;
};

/// Throws InvalidArgument on range outside 1..200 or any s < 1.
ScalarSuiteReport scalar_inequality_suite(int range, const std::vector<double>& s_values, double r = 4.5);

struct OperatorSuiteReport {
  /// |Lambda_m^r e w| <= |Lambda Lambda_m^{r-1} e w|, the gradient-Hilbert
  /// variant, and |Lambda_m^{r+1} e v| <= |Lambda Lambda_m^r e v| for
  /// v = K*w, each at tau and at 0; plus equality on axis-aligned single
  /// modes and strict inequality off axis.
  InequalityReport sharp;
  /// sup |Lambda Lambda_m^{r-1} e w| / |w|_X (bounded by 3).
  InequalityReport lift_C;
  /// sup |Lambda Lambda_m^r e (K*w)| / |w|_X (bounded by sqrt 3).
  InequalityReport biot_savart_C;
};

/// Samples must be solenoidal (they are passed through biot_savart); specs
/// need m in 1..3 and r >= 1.
OperatorSuiteReport operator_inequality_suite(const std::vector<SpectralField>& samples,
                                              const std::vector<MultiplierSpec>& specs);

/// The four nonlinear bounds whose constants are estimated empirically.
enum class NonlinearBound {
  /// |<u.grad w, W w>| + |<w.grad u, W w>|
  vorticity,
  /// |<u.grad J, W J>| + |<J.grad u, W J>|
  current,
  /// |<h.grad J, W w> + <h.grad w, W J>|
  paired_field,
  /// |<J.grad h, W w>| + |<w.grad h, W J>|
  field_stretching,
};

const char* name(NonlinearBound b);
NonlinearBound parse_nonlinear_bound(const std::string& tag);

struct ConstantEstimate {
  double empirical_C = 0.0;
  std::size_t used = 0;
  /// Samples with lhs = rhs = 0.
  std::size_t skipped = 0;
  /// Non-empty when some sample had rhs = 0 but lhs != 0; holds the seed and
  /// every nonzero coefficient of u and h.  empirical_C is then +inf.
  std::string counterexample;
};

struct ConstantSampling {
  int n = 8;
  int kmax = 2;
  double decay = 0.3;
  std::uint64_t seed = 1;
  std::size_t samples = 100;
  /// Multipliers on the drawn u and h (0 switches a field off).
  double u_scale = 1.0;
  double h_scale = 1.0;
};

/// sup over samples and m = 1..3 of lhs / rhs, with rhs the bound's
/// right-hand structure at C = 1 (H^r, X, Y norms of omega, J and Psi; sup
/// gradients on a twice-refined grid).  Throws InvalidArgument with fewer
/// than 50 samples.
ConstantEstimate estimate_constant(NonlinearBound bound, const GevreyParams& p, const ConstantSampling& sampling);

/// One central-difference measurement of d/dt 1/2 |g Psi|^2 (g the m-axis
/// weight, tau(t) = tau + tau_dot (t - t1)) over two RK4 steps S0 -> S1 -> S2,
/// against the budget at S1.
struct BalanceReport {
  double dt = 0.0;
  double fd_derivative = 0.0;
  double tau_term = 0.0;
  double k1 = 0.0, k2 = 0.0, k3 = 0.0;
  /// <dJ - dJ_literal, W J>: what the budget misses with the commonly quoted
  /// J equation.
  double k_corr = 0.0;
  /// |fd - (tau_term + k1 + k2 + k3 + k_corr)|
  double defect = 0.0;
  /// |fd - (tau_term + k1 + k2 + k3)|
  double literal_defect = 0.0;
};

BalanceReport energy_balance_check(const MHDState& s0, const MultiplierSpec& spec, double dt, double tau_dot = 0.0);

struct BalanceConvergence {
  std::vector<BalanceReport> steps;
  /// log2 of successive defect ratios divided by log2 of the dt ratios.
  std::vector<double> orders;
  double min_order = 0.0;
  /// False when some observed order falls below 1.9: the largest dt is
  /// outside the asymptotic regime (or the defect hit roundoff).
  bool asymptotic = false;
};

/// dts must be strictly decreasing, at least two.
BalanceConvergence energy_balance_convergence(const MHDState& s0, const MultiplierSpec& spec,
                                              const std::vector<double>& dts, double tau_dot = 0.0);

}  // namespace gmhd
