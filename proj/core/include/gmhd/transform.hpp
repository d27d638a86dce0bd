#pragma once

#include <array>
#include <span>
#include <vector>

#include "gmhd/spectral_field.hpp"

namespace gmhd {

/// Inverse transform: v(x_i) = sum_k vhat_k e^{i k.x_i} at every collocation
/// point.  The input is assumed Hermitian-symmetric; the imaginary part of the
/// result is roundoff and is dropped.
PhysicalField to_physical(const SpectralField& v);

/// Forward transform, vhat_k = n^-3 sum_i v(x_i) e^{-i k.x_i}.  The result is
/// made exactly Hermitian-symmetric, and the k = 0 and Nyquist modes are zeroed.
SpectralField to_spectral(const PhysicalField& v);

/// Evaluates v on a grid refined by an integer factor (zero padding), used to
/// reduce the collocation bias of sup-norms.
PhysicalField to_physical_refined(const SpectralField& v, int factor);

/// Physical-space Jacobian: entry [i][j] holds d_j v_i at every point.
using PhysicalJacobian = std::array<std::array<std::vector<double>, 3>, 3>;
PhysicalJacobian physical_jacobian(const SpectralField& v);

namespace detail {
/// Scalar inverse transform of a single coefficient cube into real samples.
void inverse_scalar(const Grid& g, std::span<const Complex> coeffs, std::span<double> out);
/// Scalar forward transform of real samples (unsymmetrized, scaled by n^-3).
void forward_scalar(const Grid& g, std::span<const double> samples, std::span<Complex> out);
/// Makes one component exactly Hermitian: c_k <- (c_k + conj(c_{-k}))/2, zero
/// mean and zero Nyquist modes.
void symmetrize(const Grid& g, std::span<Complex> coeffs);
}  // namespace detail

}  // namespace gmhd
