#pragma once

#include "gmhd/spectral_field.hpp"

namespace gmhd {

/// Orthogonal projection onto divergence-free fields, per mode
/// v_k - k (k.v_k)/|k|^2.  Modes whose divergence is already at roundoff
/// level (|k.v_k| <= 1e-14 |k||v_k|) are left untouched, which makes the
/// projection bitwise idempotent.
SpectralField leray_project(const SpectralField& v);

/// 2/3 rule: zero every mode with 3|k_i| >= n for some i.
SpectralField dealias(const SpectralField& v);
void dealias_in_place(SpectralField& v);

/// Restores exact Hermitian symmetry and pins the mean (k = 0) and Nyquist
/// modes to zero.
void enforce_real(SpectralField& v);

/// True when every mode outside the 2/3 cube is exactly zero.
bool is_dealiased(const SpectralField& v);

}  // namespace gmhd
