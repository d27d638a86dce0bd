#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gmhd/gevrey.hpp"
#include "gmhd/solver.hpp"

namespace gmhd {

struct RunSettings {
  double t_end = 1.0;
  /// Fixed step when > 0; otherwise the step comes from `cfl`.
  double dt = 0.0;
  double cfl = 0.5;
  /// Diagnostic sampling interval; every interval is split into equal steps.
  double cadence = 0.1;
  /// r, s and the initial radius tau0.
  GevreyParams gevrey;
  double C = 1.0;
  /// Calibrate C after the run so the tracked radius stays below tau_fit.
  bool fit_C = false;
  double C_tilde = 1.0;
  /// Padding factor for sup-norm evaluation.
  int sup_refine = 1;
  /// Abort when |omega|_inf + |J|_inf exceeds this multiple of its start value.
  double blowup_factor = 1e6;
};

/// One cadence sample before the radius columns are filled in.
struct RawSample {
  double t = 0.0;
  double energy = 0.0;
  double cross_helicity = 0.0;
  double bkm_integrand = 0.0;
  double grad_sum = 0.0;
  double hr_norm = 0.0;
  double tau_fit = 0.0;  // NaN when the spectrum has too few shells
  AxisSpectrum psi;
};

RawSample sample(const MHDState& s, const GevreyParams& p, int sup_refine = 1);

enum class RunStatus { completed, blowup, numerical_abort };

struct RunResult {
  explicit RunResult(MHDState s) : final_state(std::move(s)) {}

  std::vector<DiagnosticsRecord> records;
  MHDState final_state;
  RunStatus status = RunStatus::completed;
  std::string message;
  /// C used for the radius columns.  In fit mode: the smallest C keeping tau
  /// below tau_fit, raised to 2 C_tilde so the explicit minorant applies.
  double C = 0.0;
  /// Configured C_tilde, or in fit mode the run's own estimate.
  double C_tilde = 0.0;
  /// Initial radius actually used (clamped to tau_fit(0) in fit mode).
  double tau0 = 0.0;
  long steps = 0;
};

/// Called at every cadence sample (including t0) with the state, the sample
/// index and the current radius: the tracked tau for a fixed C, and
/// min(tau0, tau_fit) in fit mode (the calibrated C is only known at the end).
using SampleHook = std::function<void(const MHDState&, std::size_t, double tau)>;

/// Integrates from `initial` (starting at initial.t) to settings.t_end.
RunResult run(const MHDState& initial, const RunSettings& settings, const SampleHook& hook = {});

/// Fills tau, tau_lower, x_norm and y_norm from raw samples for a given C.
std::vector<DiagnosticsRecord> radius_columns(const std::vector<RawSample>& raw, const GevreyParams& p,
                                              double C, double C_tilde, double tau0);

}  // namespace gmhd
