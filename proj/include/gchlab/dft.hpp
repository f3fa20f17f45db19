/// \file dft.hpp
/// Real-to-complex DFT pair used by the spectral backend (FFTW behind it).

#pragma once

#include <complex>
#include <span>

namespace gchlab {

/// Forward/inverse real DFT of a fixed length. Owns its FFTW plans and
/// aligned buffers, so a single instance must not be used from two threads
/// at once; use dft_for() to get a per-thread cached instance.
class RealDft {
 public:
  explicit RealDft(int n);
  ~RealDft();
  RealDft(const RealDft&) = delete;
  RealDft& operator=(const RealDft&) = delete;

  int size() const { return n_; }
  int spectrum_size() const { return n_ / 2 + 1; }

  /// spec[j] = sum_i f[i] exp(-2 pi i j k / n), j = 0..n/2.
  void forward(std::span<const double> f, std::span<std::complex<double>> spec);
  /// Inverse transform including the 1/n normalization.
  void inverse(std::span<const std::complex<double>> spec,
               std::span<double> f);

 private:
  int n_;
  double* real_;
  void* cplx_;  // fftw_complex[n/2+1]
  void* fwd_;   // fftw_plan
  void* inv_;   // fftw_plan
};

/// Thread-local plan cache keyed by transform length.
RealDft& dft_for(int n);

} // namespace gchlab
