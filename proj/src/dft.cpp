#include "gchlab/dft.hpp"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <memory>
#include <mutex>

namespace gchlab {

namespace {
// FFTW plan creation/destruction is not thread-safe.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
} // namespace

RealDft::RealDft(int n) : n_(n) {
  std::lock_guard<std::mutex> lock(planner_mutex());
  real_ = fftw_alloc_real(static_cast<std::size_t>(n));
  auto* c = fftw_alloc_complex(static_cast<std::size_t>(n / 2 + 1));
  cplx_ = c;
  fwd_ = fftw_plan_dft_r2c_1d(n, real_, c, FFTW_ESTIMATE);
  inv_ = fftw_plan_dft_c2r_1d(n, c, real_, FFTW_ESTIMATE);
}

RealDft::~RealDft() {
  std::lock_guard<std::mutex> lock(planner_mutex());
  fftw_destroy_plan(static_cast<fftw_plan>(fwd_));
  fftw_destroy_plan(static_cast<fftw_plan>(inv_));
  fftw_free(real_);
  fftw_free(cplx_);
}

void RealDft::forward(std::span<const double> f,
                      std::span<std::complex<double>> spec) {
  std::memcpy(real_, f.data(), sizeof(double) * static_cast<std::size_t>(n_));
  fftw_execute(static_cast<fftw_plan>(fwd_));
  std::memcpy(spec.data(), cplx_,
              sizeof(fftw_complex) * static_cast<std::size_t>(n_ / 2 + 1));
}

void RealDft::inverse(std::span<const std::complex<double>> spec,
                      std::span<double> f) {
  std::memcpy(cplx_, spec.data(),
              sizeof(fftw_complex) * static_cast<std::size_t>(n_ / 2 + 1));
  fftw_execute(static_cast<fftw_plan>(inv_));
  const double scale = 1.0 / n_;
  for (int i = 0; i < n_; ++i) f[static_cast<std::size_t>(i)] = real_[i] * scale;
}

RealDft& dft_for(int n) {
  thread_local std::map<int, std::unique_ptr<RealDft>> cache;
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<RealDft>(n);
  return *slot;
}

} // namespace gchlab
