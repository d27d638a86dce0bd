#pragma once

#include "gmhd/spectral_field.hpp"

namespace gmhd {

/// Fourier multiplier |k_m|^r exp(tau |k_m|^{1/s}); m = 0 selects the l1
/// symbol |k|_1 (the full Lambda), m = 1..3 the single-axis symbol.
struct MultiplierSpec {
  int m = 0;
  double r = 0.0;
  double tau = 0.0;
  double s = 1.0;
};

/// Throws InvalidArgument on m outside 0..3, r < 0, tau < 0 or s < 1.
void validate(const MultiplierSpec& spec);

/// Symbol of the multiplier at mode k.  For q = 0 (k_m = 0, or k = 0 when
/// m = 0) the value is 1 when r = 0 and 0 otherwise.  Throws OverflowError
/// naming the mode when the weight exceeds the double range.
double multiplier_symbol(const WaveVector& k, const MultiplierSpec& spec);

/// Per-mode product with the symbol; modes with zero coefficients are skipped
/// (they never trigger the overflow check).
SpectralField lambda_apply(const SpectralField& v, const MultiplierSpec& spec);

/// ||lambda_apply(v, spec)||_{L2} without materializing the product.
double multiplier_norm(const SpectralField& v, const MultiplierSpec& spec);

/// Multiplication by sgn(k_m); modes with k_m = 0 are zeroed.
SpectralField hilbert_sign(const SpectralField& v, int m);

/// i k x v_k per mode.
SpectralField curl(const SpectralField& v);

/// Inverse curl on divergence-free fields, i k x w_k / |k|^2 per mode.
/// Throws InvalidArgument when max|k.w_k| exceeds 1e-10 max(|k||w_k|).
SpectralField biot_savart(const SpectralField& w);

/// sqrt((2 pi)^3 sum |k|^2 |v_k|^2) = ||grad v||_{L2}.
double gradient_norm(const SpectralField& v);

/// Pseudo-spectral (a . grad) b: a and the spectral gradient of b are taken to
/// physical space, multiplied, transformed back and dealiased.
SpectralField advect(const SpectralField& a, const SpectralField& b);

}  // namespace gmhd
