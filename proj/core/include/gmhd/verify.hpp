#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gmhd {

/// One line of a verification report.  Exact checks have a proven answer and
/// decide the exit status; the rest are measurements (empirical constants,
/// diagnostic ratios) whose `pass` only says the value is finite.
struct CheckRecord {
  std::string name;
  /// residual | violations | empirical_C | order | ratio
  std::string kind;
  double value = 0.0;
  /// Threshold the value was compared against (NaN for measurements).
  double limit = 0.0;
  bool pass = false;
  bool exact = false;
};

struct VerifyOptions {
  /// Scalar sweep range |j|, |k| <= range (1..200).
  int range = 100;
  /// First seed; suites draw consecutive seeds from here.
  std::uint64_t seed = 1;
  /// Band limit of random lab fields (1..kTriadBandMax).
  int size = 4;
  /// Field sets for the identity suite.
  int field_sets = 20;
  /// Random fields for the operator chains.
  int operator_samples = 200;
  /// Per-batch samples for the nonlinear constants.
  int constant_samples = 100;
};

/// Splitting identities (both sign conventions of the third exponential
/// term), the absolute-difference identity, the weighted-transport
/// cancellation with its non-solenoidal control, and the triad-sum oracle
/// against the pseudo-spectral product.
std::vector<CheckRecord> verify_identities(const VerifyOptions& opt);

/// Exhaustive scalar sweeps, the constant-1 operator chains (axis equality
/// included), the lift / Biot-Savart constants and the four nonlinear
/// constants over two independent batches.
std::vector<CheckRecord> verify_inequalities(const VerifyOptions& opt);

/// Second-order convergence of the weighted energy budget on an evolved
/// Taylor-Green state, for a frozen and a shrinking radius.
std::vector<CheckRecord> verify_balance(const VerifyOptions& opt);

/// Throws InvalidArgument naming the suite when unknown; "all" runs every
/// suite in the order above.
std::vector<CheckRecord> verify_suite(const std::string& suite, const VerifyOptions& opt);

bool all_exact_pass(const std::vector<CheckRecord>& records);

}  // namespace gmhd
