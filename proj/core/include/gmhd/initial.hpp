#pragma once

#include <cstdint>
#include <functional>

#include "gmhd/spectral_field.hpp"

namespace gmhd {

enum class InitKind { taylor_green_mhd, orszag_tang_3d, random_band };

struct RandomBand {
  std::uint64_t seed = 1;
  int kmax = 4;
  double amplitude = 1.0;
  /// Mode magnitudes are amplitude * exp(-decay * |k|_1).
  double decay = 0.0;
};

struct InitSpec {
  InitKind kind = InitKind::taylor_green_mhd;
  RandomBand band;
};

/// Divergence-free, mean-zero, real initial data.  Throws InvalidArgument when
/// a random band would alias (3 kmax >= n).
MHDState init_state(const InitSpec& spec, const Grid& grid);

/// u = (sin x cos y cos z, -cos x sin y cos z, 0),
/// h = (cos x sin y sin z, sin x cos y sin z, -2 sin x sin y cos z).
MHDState taylor_green_mhd(const Grid& grid);

/// u = (-2 sin y, 2 sin x, 0), h = (-2 sin 2y + sin z, 2 sin x + sin z, 0).
MHDState orszag_tang_3d(const Grid& grid);

/// Random solenoidal pair: every mode with |k|_inf <= kmax gets a random
/// direction orthogonal to k, a random phase, and the deterministic magnitude
/// amplitude * exp(-decay |k|_1).  u is drawn before h from one stream.
MHDState random_band(const Grid& grid, const RandomBand& band);

/// Gaussian random field: each mode with |k|_inf <= kmax gets complex normal
/// components scaled by amplitude * exp(-decay |k|_1), optionally projected
/// onto divergence-free fields.  Used by the verification lab; only kmax < n/2
/// is required (the result need not be dealiased).
SpectralField random_field(const Grid& grid, std::uint64_t seed, int kmax, bool solenoidal,
                           double amplitude = 1.0, double decay = 0.0);

/// Forward transform of an analytic vector field sampled at the collocation
/// points; coefficients below 1e-15 of the largest are cleared.
SpectralField sample_field(const Grid& grid,
                           const std::function<std::array<double, 3>(double, double, double)>& f);

}  // namespace gmhd
