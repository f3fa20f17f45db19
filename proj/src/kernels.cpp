#include "gchlab/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <vector>

namespace gchlab::kernels {

namespace {

#ifdef GCHLAB_HAVE_OPENMP
std::atomic<Exec> g_exec{Exec::Parallel};
#else
std::atomic<Exec> g_exec{Exec::Serial};
#endif

// Below this size the parallel path falls back to the serial loops; spawning
// a team for a few thousand elements costs more than the loop itself.
constexpr std::ptrdiff_t grain = 8192;

// Per-block partial reduction. Both execution modes combine the block values
// in index order, which pins the floating-point result.
template <class BlockOp>
double blocked_reduce_serial(std::size_t n, double init, BlockOp&& block) {
  double acc = init;
  for (std::size_t b = 0; b < n; b += reduction_block)
    acc = block(b, std::min(n, b + reduction_block), acc);
  return acc;
}

inline std::size_t wrap(std::ptrdiff_t i, std::ptrdiff_t n) {
  if (i < 0) i += n;
  if (i >= n) i -= n;
  return static_cast<std::size_t>(i);
}

double window_dot(std::span<const double> f, std::span<const double> w,
                  std::ptrdiff_t halfwidth, double h, std::ptrdiff_t i) {
  const auto n = static_cast<std::ptrdiff_t>(f.size());
  double acc = 0.0;
  for (std::ptrdiff_t d = -halfwidth; d <= halfwidth; ++d)
    acc += w[static_cast<std::size_t>(d + halfwidth)] * f[wrap(i - d, n)];
  return h * acc;
}

} // namespace

Exec execution() { return g_exec.load(std::memory_order_relaxed); }
void set_execution(Exec mode) { g_exec.store(mode, std::memory_order_relaxed); }

// ---------------------------------------------------------------- serial --

namespace serial {

void fill(std::span<double> dst, double value) {
  for (auto& v : dst) v = value;
}

void scale(std::span<double> x, double a) {
  for (auto& v : x) v *= a;
}

void add_scaled(std::span<double> dst, std::span<const double> x, double a) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += a * x[i];
}

void combine(std::span<double> dst, double a, std::span<const double> x,
             double b, std::span<const double> y) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = a * x[i] + b * y[i];
}

void multiply(std::span<double> dst, std::span<const double> x,
              std::span<const double> y) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = x[i] * y[i];
}

void rk4_update(std::span<double> u, std::span<const double> k1,
                std::span<const double> k2, std::span<const double> k3,
                std::span<const double> k4, double dt) {
  const double c = dt / 6.0;
  for (std::size_t i = 0; i < u.size(); ++i)
    u[i] += c * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
}

void diff_central(std::span<double> dst, std::span<const double> f,
                  double inv_2h) {
  const std::size_t n = f.size();
  dst[0] = (f[1] - f[n - 1]) * inv_2h;
  for (std::size_t i = 1; i + 1 < n; ++i)
    dst[i] = (f[i + 1] - f[i - 1]) * inv_2h;
  dst[n - 1] = (f[0] - f[n - 2]) * inv_2h;
}

void diff_second(std::span<double> dst, std::span<const double> f,
                 double inv_h2) {
  const std::size_t n = f.size();
  dst[0] = (f[1] - 2.0 * f[0] + f[n - 1]) * inv_h2;
  for (std::size_t i = 1; i + 1 < n; ++i)
    dst[i] = (f[i + 1] - 2.0 * f[i] + f[i - 1]) * inv_h2;
  dst[n - 1] = (f[0] - 2.0 * f[n - 1] + f[n - 2]) * inv_h2;
}

void apply_symbol(std::span<std::complex<double>> spec,
                  std::span<const double> symbol) {
  for (std::size_t i = 0; i < spec.size(); ++i) spec[i] *= symbol[i];
}

void apply_symbol(std::span<std::complex<double>> spec,
                  std::span<const std::complex<double>> symbol) {
  for (std::size_t i = 0; i < spec.size(); ++i) spec[i] *= symbol[i];
}

void convolve_window(std::span<double> dst, std::span<const double> f,
                     std::span<const double> weights, std::ptrdiff_t halfwidth,
                     double h) {
  const auto n = static_cast<std::ptrdiff_t>(f.size());
  for (std::ptrdiff_t i = 0; i < n; ++i)
    dst[static_cast<std::size_t>(i)] = window_dot(f, weights, halfwidth, h, i);
}

double sum(std::span<const double> x) {
  return blocked_reduce_serial(x.size(), 0.0,
                               [&](std::size_t b, std::size_t e, double acc) {
                                 double s = 0.0;
                                 for (std::size_t i = b; i < e; ++i) s += x[i];
                                 return acc + s;
                               });
}

double sum_abs(std::span<const double> x) {
  return blocked_reduce_serial(
      x.size(), 0.0, [&](std::size_t b, std::size_t e, double acc) {
        double s = 0.0;
        for (std::size_t i = b; i < e; ++i) s += std::abs(x[i]);
        return acc + s;
      });
}

double sum_sq(std::span<const double> x) {
  return blocked_reduce_serial(
      x.size(), 0.0, [&](std::size_t b, std::size_t e, double acc) {
        double s = 0.0;
        for (std::size_t i = b; i < e; ++i) s += x[i] * x[i];
        return acc + s;
      });
}

double max_abs(std::span<const double> x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

double min_value(std::span<const double> x) {
  double m = std::numeric_limits<double>::infinity();
  for (double v : x) m = std::min(m, v);
  return m;
}

double max_value(std::span<const double> x) {
  double m = -std::numeric_limits<double>::infinity();
  for (double v : x) m = std::max(m, v);
  return m;
}

bool all_finite(std::span<const double> x) {
  for (double v : x)
    if (!std::isfinite(v)) return false;
  return true;
}

} // namespace serial

// -------------------------------------------------------------- parallel --

namespace parallel {

namespace {

// Runs the per-block partial reduction over blocks in parallel, then folds
// the block results serially in index order.
template <class BlockOp>
double blocked_reduce(std::span<const double> x, double init,
                      BlockOp&& block) {
  const std::size_t n = x.size();
  const std::size_t nblocks = (n + reduction_block - 1) / reduction_block;
  if (n < static_cast<std::size_t>(grain)) {
    double acc = init;
    for (std::size_t b = 0; b < nblocks; ++b) {
      const std::size_t lo = b * reduction_block;
      acc = block(lo, std::min(n, lo + reduction_block), acc);
    }
    return acc;
  }
  std::vector<double> partial(nblocks);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(nblocks); ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * reduction_block;
    partial[static_cast<std::size_t>(b)] =
        block(lo, std::min(n, lo + reduction_block), 0.0);
  }
  double acc = init;
  for (double p : partial) acc += p;
  return acc;
}

} // namespace

void fill(std::span<double> dst, double value) {
  const auto n = static_cast<std::ptrdiff_t>(dst.size());
#pragma omp parallel for schedule(static) if (n >= grain)
  for (std::ptrdiff_t i = 0; i < n; ++i) dst[static_cast<std::size_t>(i)] = value;
}

void scale(std::span<double> x, double a) {
  const auto n = static_cast<std::ptrdiff_t>(x.size());
#pragma omp parallel for schedule(static) if (n >= grain)
  for (std::ptrdiff_t i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] *= a;
}

void add_scaled(std::span<double> dst, std::span<const double> x, double a) {
  const auto n = static_cast<std::ptrdiff_t>(dst.size());
#pragma omp parallel for schedule(static) if (n >= grain)
  for (std::ptrdiff_t i = 0; i < n; ++i)
    dst[static_cast<std::size_t>(i)] += a * x[static_cast<std::size_t>(i)];
}

void combine(std::span<double> dst, double a, std::span<const double> x,
             double b, std::span<const double> y) {
  const auto n = static_cast<std::ptrdiff_t>(dst.size());
#pragma omp parallel for schedule(static) if (n >= grain)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto u = static_cast<std::size_t>(i);
    dst[u] = a * x[u] + b * y[u];
  }
}

void multiply(std::span<double> dst, std::span<const double> x,
              std::span<const double> y) {
  const auto n = static_cast<std::ptrdiff_t>(dst.size());
#pragma omp parallel for schedule(static) if (n >= grain)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto u = static_cast<std::size_t>(i);
    dst[u] = x[u] * y[u];
  }
}

void rk4_update(std::span<double> u, std::span<const double> k1,
                std::span<const double> k2, std::span<const double> k3,
                std::span<const double> k4, double dt) {
  const double c = dt / 6.0;
  const auto n = static_cast<std::ptrdiff_t>(u.size());
#pragma omp parallel for schedule(static) if (n >= grain)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto j = static_cast<std::size_t>(i);
    u[j] += c * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
  }
}

void diff_central(std::span<double> dst, std::span<const double> f,
                  double inv_2h) {
  const auto n = static_cast<std::ptrdiff_t>(f.size());
#pragma omp parallel for schedule(static) if (n >= grain)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto ip = static_cast<std::size_t>(i + 1 == n ? 0 : i + 1);
    const auto im = static_cast<std::size_t>(i == 0 ? n - 1 : i - 1);
    dst[static_cast<std::size_t>(i)] = (f[ip] - f[im]) * inv_2h;
  }
}

void diff_second(std::span<double> dst, std::span<const double> f,
                 double inv_h2) {
  const auto n = static_cast<std::ptrdiff_t>(f.size());
#pragma omp parallel for schedule(static) if (n >= grain)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto j = static_cast<std::size_t>(i);
    const auto ip = static_cast<std::size_t>(i + 1 == n ? 0 : i + 1);
    const auto im = static_cast<std::size_t>(i == 0 ? n - 1 : i - 1);
    dst[j] = (f[ip] - 2.0 * f[j] + f[im]) * inv_h2;
  }
}

void apply_symbol(std::span<std::complex<double>> spec,
                  std::span<const double> symbol) {
  const auto n = static_cast<std::ptrdiff_t>(spec.size());
#pragma omp parallel for schedule(static) if (n >= grain)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto j = static_cast<std::size_t>(i);
    spec[j] *= symbol[j];
  }
}

void apply_symbol(std::span<std::complex<double>> spec,
                  std::span<const std::complex<double>> symbol) {
  const auto n = static_cast<std::ptrdiff_t>(spec.size());
#pragma omp parallel for schedule(static) if (n >= grain)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto j = static_cast<std::size_t>(i);
    spec[j] *= symbol[j];
  }
}

void convolve_window(std::span<double> dst, std::span<const double> f,
                     std::span<const double> weights, std::ptrdiff_t halfwidth,
                     double h) {
  const auto n = static_cast<std::ptrdiff_t>(f.size());
#pragma omp parallel for schedule(static) if (n * (2 * halfwidth + 1) >= grain)
  for (std::ptrdiff_t i = 0; i < n; ++i)
    dst[static_cast<std::size_t>(i)] = window_dot(f, weights, halfwidth, h, i);
}

double sum(std::span<const double> x) {
  return blocked_reduce(x, 0.0, [&](std::size_t b, std::size_t e, double acc) {
    double s = 0.0;
    for (std::size_t i = b; i < e; ++i) s += x[i];
    return acc + s;
  });
}

double sum_abs(std::span<const double> x) {
  return blocked_reduce(x, 0.0, [&](std::size_t b, std::size_t e, double acc) {
    double s = 0.0;
    for (std::size_t i = b; i < e; ++i) s += std::abs(x[i]);
    return acc + s;
  });
}

double sum_sq(std::span<const double> x) {
  return blocked_reduce(x, 0.0, [&](std::size_t b, std::size_t e, double acc) {
    double s = 0.0;
    for (std::size_t i = b; i < e; ++i) s += x[i] * x[i];
    return acc + s;
  });
}

double max_abs(std::span<const double> x) {
  const auto n = static_cast<std::ptrdiff_t>(x.size());
  double m = 0.0;
#pragma omp parallel for schedule(static) reduction(max : m) if (n >= grain)
  for (std::ptrdiff_t i = 0; i < n; ++i)
    m = std::max(m, std::abs(x[static_cast<std::size_t>(i)]));
  return m;
}

double min_value(std::span<const double> x) {
  const auto n = static_cast<std::ptrdiff_t>(x.size());
  double m = std::numeric_limits<double>::infinity();
#pragma omp parallel for schedule(static) reduction(min : m) if (n >= grain)
  for (std::ptrdiff_t i = 0; i < n; ++i)
    m = std::min(m, x[static_cast<std::size_t>(i)]);
  return m;
}

double max_value(std::span<const double> x) {
  const auto n = static_cast<std::ptrdiff_t>(x.size());
  double m = -std::numeric_limits<double>::infinity();
#pragma omp parallel for schedule(static) reduction(max : m) if (n >= grain)
  for (std::ptrdiff_t i = 0; i < n; ++i)
    m = std::max(m, x[static_cast<std::size_t>(i)]);
  return m;
}

bool all_finite(std::span<const double> x) {
  const auto n = static_cast<std::ptrdiff_t>(x.size());
  int ok = 1;
#pragma omp parallel for schedule(static) reduction(&& : ok) if (n >= grain)
  for (std::ptrdiff_t i = 0; i < n; ++i)
    ok = ok && std::isfinite(x[static_cast<std::size_t>(i)]);
  return ok != 0;
}

} // namespace parallel

// -------------------------------------------------------------- dispatch --

#define GCHLAB_DISPATCH(call) \
  (execution() == Exec::Parallel ? parallel::call : serial::call)

void fill(std::span<double> dst, double value) {
  GCHLAB_DISPATCH(fill(dst, value));
}
void scale(std::span<double> x, double a) { GCHLAB_DISPATCH(scale(x, a)); }
void add_scaled(std::span<double> dst, std::span<const double> x, double a) {
  GCHLAB_DISPATCH(add_scaled(dst, x, a));
}
void combine(std::span<double> dst, double a, std::span<const double> x,
             double b, std::span<const double> y) {
  GCHLAB_DISPATCH(combine(dst, a, x, b, y));
}
void multiply(std::span<double> dst, std::span<const double> x,
              std::span<const double> y) {
  GCHLAB_DISPATCH(multiply(dst, x, y));
}
void rk4_update(std::span<double> u, std::span<const double> k1,
                std::span<const double> k2, std::span<const double> k3,
                std::span<const double> k4, double dt) {
  GCHLAB_DISPATCH(rk4_update(u, k1, k2, k3, k4, dt));
}
void diff_central(std::span<double> dst, std::span<const double> f,
                  double inv_2h) {
  GCHLAB_DISPATCH(diff_central(dst, f, inv_2h));
}
void diff_second(std::span<double> dst, std::span<const double> f,
                 double inv_h2) {
  GCHLAB_DISPATCH(diff_second(dst, f, inv_h2));
}
void apply_symbol(std::span<std::complex<double>> spec,
                  std::span<const double> symbol) {
  GCHLAB_DISPATCH(apply_symbol(spec, symbol));
}
void apply_symbol(std::span<std::complex<double>> spec,
                  std::span<const std::complex<double>> symbol) {
  GCHLAB_DISPATCH(apply_symbol(spec, symbol));
}
void convolve_window(std::span<double> dst, std::span<const double> f,
                     std::span<const double> weights, std::ptrdiff_t halfwidth,
                     double h) {
  GCHLAB_DISPATCH(convolve_window(dst, f, weights, halfwidth, h));
}
double sum(std::span<const double> x) { return GCHLAB_DISPATCH(sum(x)); }
double sum_abs(std::span<const double> x) {
  return GCHLAB_DISPATCH(sum_abs(x));
}
double sum_sq(std::span<const double> x) { return GCHLAB_DISPATCH(sum_sq(x)); }
double max_abs(std::span<const double> x) {
  return GCHLAB_DISPATCH(max_abs(x));
}
double min_value(std::span<const double> x) {
  return GCHLAB_DISPATCH(min_value(x));
}
double max_value(std::span<const double> x) {
  return GCHLAB_DISPATCH(max_value(x));
}
bool all_finite(std::span<const double> x) {
  return GCHLAB_DISPATCH(all_finite(x));
}

#undef GCHLAB_DISPATCH

} // namespace gchlab::kernels
