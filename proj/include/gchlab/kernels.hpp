/// \file kernels.hpp
/// Data-parallel array primitives underneath all field operations.
///
/// Every kernel exists twice: a serial reference in kernels::serial and an
/// OpenMP version in kernels::parallel. The top-level entry points dispatch
/// on a process-wide execution mode. Reductions accumulate fixed-size blocks
/// in index order, so the parallel results are bitwise identical to the
/// serial reference and do not depend on the thread count.

#pragma once

#include <complex>
#include <cstddef>
#include <span>

namespace gchlab::kernels {

enum class Exec { Serial, Parallel };

/// Process-wide kernel execution mode. Defaults to Parallel when compiled
/// with OpenMP, Serial otherwise.
Exec execution();
void set_execution(Exec mode);

/// Block length used by the deterministic reductions.
inline constexpr std::size_t reduction_block = 4096;

namespace serial {
void fill(std::span<double> dst, double value);
void scale(std::span<double> x, double a);
void add_scaled(std::span<double> dst, std::span<const double> x, double a);
void combine(std::span<double> dst, double a, std::span<const double> x,
             double b, std::span<const double> y);
void multiply(std::span<double> dst, std::span<const double> x,
              std::span<const double> y);
void rk4_update(std::span<double> u, std::span<const double> k1,
                std::span<const double> k2, std::span<const double> k3,
                std::span<const double> k4, double dt);
void diff_central(std::span<double> dst, std::span<const double> f,
                  double inv_2h);
void diff_second(std::span<double> dst, std::span<const double> f,
                 double inv_h2);
void apply_symbol(std::span<std::complex<double>> spec,
                  std::span<const double> symbol);
void apply_symbol(std::span<std::complex<double>> spec,
                  std::span<const std::complex<double>> symbol);
void convolve_window(std::span<double> dst, std::span<const double> f,
                     std::span<const double> weights, std::ptrdiff_t halfwidth,
                     double h);
double sum(std::span<const double> x);
double sum_abs(std::span<const double> x);
double sum_sq(std::span<const double> x);
double max_abs(std::span<const double> x);
double min_value(std::span<const double> x);
double max_value(std::span<const double> x);
bool all_finite(std::span<const double> x);
} // namespace serial

namespace parallel {
void fill(std::span<double> dst, double value);
void scale(std::span<double> x, double a);
void add_scaled(std::span<double> dst, std::span<const double> x, double a);
void combine(std::span<double> dst, double a, std::span<const double> x,
             double b, std::span<const double> y);
void multiply(std::span<double> dst, std::span<const double> x,
              std::span<const double> y);
void rk4_update(std::span<double> u, std::span<const double> k1,
                std::span<const double> k2, std::span<const double> k3,
                std::span<const double> k4, double dt);
void diff_central(std::span<double> dst, std::span<const double> f,
                  double inv_2h);
void diff_second(std::span<double> dst, std::span<const double> f,
                 double inv_h2);
void apply_symbol(std::span<std::complex<double>> spec,
                  std::span<const double> symbol);
void apply_symbol(std::span<std::complex<double>> spec,
                  std::span<const std::complex<double>> symbol);
void convolve_window(std::span<double> dst, std::span<const double> f,
                     std::span<const double> weights, std::ptrdiff_t halfwidth,
                     double h);
double sum(std::span<const double> x);
double sum_abs(std::span<const double> x);
double sum_sq(std::span<const double> x);
double max_abs(std::span<const double> x);
double min_value(std::span<const double> x);
double max_value(std::span<const double> x);
bool all_finite(std::span<const double> x);
} // namespace parallel

// Dispatching entry points used by the rest of the library.
void fill(std::span<double> dst, double value);
void scale(std::span<double> x, double a);
void add_scaled(std::span<double> dst, std::span<const double> x, double a);
void combine(std::span<double> dst, double a, std::span<const double> x,
             double b, std::span<const double> y);
void multiply(std::span<double> dst, std::span<const double> x,
              std::span<const double> y);
void rk4_update(std::span<double> u, std::span<const double> k1,
                std::span<const double> k2, std::span<const double> k3,
                std::span<const double> k4, double dt);
void diff_central(std::span<double> dst, std::span<const double> f,
                  double inv_2h);
void diff_second(std::span<double> dst, std::span<const double> f,
                 double inv_h2);
void apply_symbol(std::span<std::complex<double>> spec,
                  std::span<const double> symbol);
void apply_symbol(std::span<std::complex<double>> spec,
                  std::span<const std::complex<double>> symbol);
void convolve_window(std::span<double> dst, std::span<const double> f,
                     std::span<const double> weights, std::ptrdiff_t halfwidth,
                     double h);
double sum(std::span<const double> x);
double sum_abs(std::span<const double> x);
double sum_sq(std::span<const double> x);
double max_abs(std::span<const double> x);
double min_value(std::span<const double> x);
double max_value(std::span<const double> x);
bool all_finite(std::span<const double> x);

} // namespace gchlab::kernels
