#pragma once

#include <array>
#include <vector>

#include "gmhd/spectral_field.hpp"

namespace gmhd {

struct GevreyParams {
  double r = 4.5;
  double s = 1.0;
  double tau = 0.0;
};

enum class GevreySpace { X, Y };

/// Throws InvalidArgument unless r >= 0, s >= 1, tau >= 0.
void validate(const GevreyParams& p);

/// r > 5/2 + 3/(2s): below this the radius estimates lose their regularity margin.
bool above_threshold(const GevreyParams& p);

/// sqrt((2 pi)^3 sum_k (1 + |k|^2)^r |v_k|^2)
double sobolev_norm(const SpectralField& v, double r);

/// Per-axis energy spectrum S_m[q] = sum over modes with |k_m| = q of |v_k|^2,
/// accumulated over any number of fields.  Enough to evaluate X and Y norms at
/// every (r, tau, s) without touching the fields again.
struct AxisSpectrum {
  int qmax = 0;
  std::array<std::vector<double>, 3> energy;
  /// A mode with nonzero content at each (m, q), for error messages.
  std::array<std::vector<WaveVector>, 3> witness;

  explicit AxisSpectrum(int qmax_ = 0);
  void add(const SpectralField& v);
};

AxisSpectrum axis_spectrum(const SpectralField& v);

/// sqrt(sum_m (2 pi)^3 sum_q q^{2r} e^{2 tau q^{1/s}} S_m[q]).  Throws
/// OverflowError naming a contributing mode when a weight is not finite.
double gevrey_norm(const AxisSpectrum& spec, double r, double tau, double s);

double gevrey_norm(const SpectralField& v, const GevreyParams& p, GevreySpace space = GevreySpace::X);

struct NormRecord {
  double hr = 0.0;
  double x_norm = 0.0;
  double y_norm = 0.0;
  double grad_u_sup = 0.0;
  double grad_h_sup = 0.0;
  double hr_omega = 0.0, hr_j = 0.0;
  double x_omega = 0.0, x_j = 0.0;
  double y_omega = 0.0, y_j = 0.0;
};

/// Norms of Psi = (omega, J) = (curl u, curl h); combined norms are
/// sqrt(|omega|^2 + |J|^2).  Gradient sup-norms use `refine`-fold padding.
NormRecord compute_norms(const MHDState& s, const GevreyParams& p, int refine = 1);

/// Max over collocation points of the largest |d_j v_i|, computed spectrally
/// on a grid refined by `refine` (1 = plain collocation).
double sup_gradient(const SpectralField& v, int refine = 1);

/// Max over collocation points of the Euclidean magnitude |v(x)|.
double sup_norm(const SpectralField& v, int refine = 1);

/// Empirical radius: least-squares slope of log(shell max |v_k|) against
/// -q^{1/s} over |k|_1 shells q >= 1 whose maximum exceeds 1e-14 of the global
/// maximum.  Clamped at 0.  Throws InvalidArgument with fewer than 4 shells.
double fit_radius(const SpectralField& v, double s);
/// Same with the per-mode statistic sqrt(|u_k|^2 + |h_k|^2).
double fit_radius(const MHDState& st, double s);

/// Shell maxima of sqrt(|u_k|^2 + |h_k|^2) (or of |v_k| when h is null),
/// indexed by |k|_1.
std::vector<double> shell_max(const SpectralField& u, const SpectralField* h = nullptr);

}  // namespace gmhd
