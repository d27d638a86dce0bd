#include "gmhd/transform.hpp"

#include <fftw3.h>

#include <map>
#include <memory>
#include <mutex>

#include "gmhd/errors.hpp"

namespace gmhd {
namespace {

// In-place complex 3D plans for one grid size.  FFTW_ESTIMATE keeps the
// algorithm choice independent of timing, so repeated runs are bitwise equal.
struct PlanPair {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
  ~PlanPair() {
    if (forward) fftw_destroy_plan(forward);
    if (backward) fftw_destroy_plan(backward);
  }
};

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

const PlanPair& plans_for(int n) {
  static std::map<int, std::unique_ptr<PlanPair>> cache;
  std::lock_guard lock(planner_mutex());
  auto& slot = cache[n];
  if (!slot) {
    slot = std::make_unique<PlanPair>();
    const std::size_t count = static_cast<std::size_t>(n) * n * n;
    auto* buf = fftw_alloc_complex(count);
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    slot->forward = fftw_plan_dft_3d(n, n, n, buf, buf, FFTW_FORWARD, flags);
    slot->backward = fftw_plan_dft_3d(n, n, n, buf, buf, FFTW_BACKWARD, flags);
    fftw_free(buf);
    if (!slot->forward || !slot->backward) throw Error("FFTW planning failed");
  }
  return *slot;
}

std::vector<Complex>& scratch(std::size_t count) {
  thread_local std::vector<Complex> buf;
  if (buf.size() < count) buf.resize(count);
  return buf;
}

fftw_complex* as_fftw(Complex* p) { return reinterpret_cast<fftw_complex*>(p); }

}  // namespace

namespace detail {

void inverse_scalar(const Grid& g, std::span<const Complex> coeffs, std::span<double> out) {
  const std::size_t count = g.size();
  auto& buf = scratch(count);
  std::copy(coeffs.begin(), coeffs.end(), buf.begin());
  fftw_execute_dft(plans_for(g.n()).backward, as_fftw(buf.data()), as_fftw(buf.data()));
  for (std::size_t i = 0; i < count; ++i) out[i] = buf[i].real();
}

void forward_scalar(const Grid& g, std::span<const double> samples, std::span<Complex> out) {
  const std::size_t count = g.size();
  auto& buf = scratch(count);
  for (std::size_t i = 0; i < count; ++i) buf[i] = Complex(samples[i], 0.0);
  fftw_execute_dft(plans_for(g.n()).forward, as_fftw(buf.data()), as_fftw(buf.data()));
  const double scale = 1.0 / static_cast<double>(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = buf[i] * scale;
}

void symmetrize(const Grid& g, std::span<Complex> c) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    const WaveVector k = g.wave(i);
    if (g.is_nyquist(k)) {
      c[i] = Complex{};
      continue;
    }
    const std::size_t j = g.flat_of(-k);
    if (j < i) continue;  // pair already handled
    if (j == i) {
      c[i] = Complex{};  // only k = 0 is its own partner off the Nyquist planes
      continue;
    }
    const Complex a = 0.5 * (c[i] + std::conj(c[j]));
    c[i] = a;
    c[j] = std::conj(a);
  }
}

}  // namespace detail

PhysicalField to_physical(const SpectralField& v) {
  PhysicalField out(v.grid());
  for (int c = 0; c < 3; ++c) detail::inverse_scalar(v.grid(), v.component(c), out.component(c));
  return out;
}

SpectralField to_spectral(const PhysicalField& v) {
  SpectralField out(v.grid());
  for (int c = 0; c < 3; ++c) {
    detail::forward_scalar(v.grid(), v.component(c), out.component(c));
    detail::symmetrize(v.grid(), out.component(c));
  }
  return out;
}

PhysicalField to_physical_refined(const SpectralField& v, int factor) {
  if (factor < 1) throw InvalidArgument("refinement factor must be >= 1");
  if (factor == 1) return to_physical(v);
  const Grid& g = v.grid();
  const Grid fine(g.n() * factor);
  SpectralField padded(fine);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const WaveVector k = g.wave(i);
    if (g.is_nyquist(k)) continue;
    padded.set_mode(k, v.at(i));
  }
  return to_physical(padded);
}

PhysicalJacobian physical_jacobian(const SpectralField& v) {
  const Grid& g = v.grid();
  PhysicalJacobian jac;
  std::vector<Complex> deriv(g.size());
  for (int i = 0; i < 3; ++i) {
    const auto vi = v.component(i);
    for (int j = 0; j < 3; ++j) {
      for (std::size_t f = 0; f < g.size(); ++f) {
        const WaveVector k = g.wave(f);
        deriv[f] = Complex(0.0, double(k[j])) * vi[f];
      }
      jac[i][j].resize(g.size());
      detail::inverse_scalar(g, deriv, jac[i][j]);
    }
  }
  return jac;
}

}  // namespace gmhd
