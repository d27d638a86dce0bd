#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gmhd/initial.hpp"
#include "gmhd/simulation.hpp"

namespace gmhd {

struct OutputConfig {
  std::string dir = ".";
  std::string csv = "timeseries.csv";
  /// File prefix for per-sample spectrum snapshots; empty disables them.
  std::string spectrum;
  /// Write a checkpoint every this many samples (0 = never).
  int checkpoint_every = 0;
};

struct RunConfig {
  int n = 32;
  InitSpec initial;
  RunSettings run;
  OutputConfig output;
  /// Non-fatal remarks (e.g. r below the regularity threshold).
  std::vector<std::string> warnings;
};

/// INI-style config:
///
///   [grid]        n                      (power of two, 8..512)
///   [initial]     kind = taylor_green | orszag_tang | random_band
///                 seed, kmax, amplitude  (random_band only, required there)
///                 decay                  (random_band only, default 0)
///   [time]        t_end, cadence, and exactly one of dt / cfl
///   [gevrey]      tau0 (> 0); r (default 4.5), s (default 1)
///   [radius]      C = <number> | fit; C_tilde (default 1)
///   [diagnostics] sup_refine (default 1), blowup_factor (default 1e6)
///   [output]      dir, csv, spectrum, checkpoint_every
///
/// Unknown sections or keys are rejected by name; all missing required keys
/// are reported together.  Throws ConfigError.
RunConfig parse_config(std::istream& in, const std::string& source = "<config>");
RunConfig load_config(const std::string& path);

/// GMHD_OUTPUT_DIR, when set and non-empty, replaces output.dir.
void apply_environment(RunConfig& cfg);

inline constexpr const char* kTimeseriesHeader =
    "t,energy,cross_helicity,bkm_integrand,grad_sum,hr_norm,x_norm,y_norm,tau,tau_fit,tau_lower";
inline constexpr const char* kSpectrumHeader = "shell,k1_abs_max,amplitude_max,amplitude_l2";

/// 17 significant digits, so every double round-trips.
std::string format_double(double x);

void write_timeseries(std::ostream& out, const std::vector<DiagnosticsRecord>& records);

/// One row per |k|_1 shell q >= 1: q, the largest |k|_1 in the shell (= q),
/// the shell maximum and the shell l2 sum of sqrt(|u_k|^2 + |h_k|^2).
void write_spectrum(std::ostream& out, const MHDState& s);

inline constexpr std::uint32_t kCheckpointVersion = 1;

/// Binary layout (little endian): "GMHD", u32 version, u32 n, f64 t, r, s,
/// tau, then for u and h, for each component, every mode in k-lexicographic
/// order (k1, k2, k3 each ascending from -n/2+1 to n/2) as f64 (re, im).
struct Checkpoint {
  MHDState state;
  GevreyParams gevrey;
};

void write_checkpoint(std::ostream& out, const MHDState& s, const GevreyParams& p);
/// Throws CheckpointError on bad magic, version mismatch (naming found and
/// expected versions), an invalid grid or truncation.
Checkpoint read_checkpoint(std::istream& in);
void save_checkpoint(const std::string& path, const MHDState& s, const GevreyParams& p);
Checkpoint load_checkpoint(const std::string& path);

struct RunArtifacts {
  std::string csv;
  std::vector<std::string> spectra;
  std::vector<std::string> checkpoints;
};

/// Runs from `initial` with cfg.run, writing the CSV, spectrum snapshots and
/// checkpoints under cfg.output.dir (created if missing).
RunResult run_with_outputs(const RunConfig& cfg, const MHDState& initial, RunArtifacts* artifacts = nullptr);

/// 0 completed, 2 blow-up or numerical abort.
int exit_code(RunStatus status);

}  // namespace gmhd
