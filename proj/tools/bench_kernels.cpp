// Times the serial reference kernels against the OpenMP path, plus one
// whole-RHS evaluation per backend. Usage: gchlab_bench [size ...]

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "gchlab/dynamics.hpp"
#include "gchlab/kernels.hpp"

using gchlab::kernels::Exec;
namespace kn = gchlab::kernels;

namespace {

std::vector<double> random_array(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> v(n);
  for (auto& x : v) x = dist(rng);
  return v;
}

double time_ms(const std::function<void()>& fn, int iterations) {
  fn(); // warm up
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < iterations; ++i) fn();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count() /
         iterations;
}

void report(const char* name, std::size_t n, const std::function<void()>& fn,
            int iterations) {
  kn::set_execution(Exec::Serial);
  const double serial = time_ms(fn, iterations);
  kn::set_execution(Exec::Parallel);
  const double parallel = time_ms(fn, iterations);
  std::printf("%-18s n=%-8zu serial %9.4f ms   omp %9.4f ms   speedup %5.2fx\n",
              name, n, serial, parallel, serial / parallel);
}

} // namespace

int main(int argc, char** argv) {
  std::vector<std::size_t> sizes;
  for (int i = 1; i < argc; ++i) sizes.push_back(std::stoul(argv[i]));
  if (sizes.empty()) sizes = {1u << 14, 1u << 17, 1u << 20};

  for (std::size_t n : sizes) {
    auto x = random_array(n, 1);
    auto y = random_array(n, 2);
    std::vector<double> dst(n);
    const int iters = n >= (1u << 20) ? 50 : 400;

    report("multiply", n, [&] { kn::multiply(dst, x, y); }, iters);
    report("add_scaled", n, [&] { kn::add_scaled(dst, x, 1.1); }, iters);
    report("diff_central", n, [&] { kn::diff_central(dst, x, 0.5); }, iters);
    report("sum_sq", n, [&] { volatile double s = kn::sum_sq(x); (void)s; },
           iters);
    report("max_abs", n, [&] { volatile double s = kn::max_abs(x); (void)s; },
           iters);
    const auto w = random_array(129, 3);
    report("convolve_w64", n,
           [&] { kn::convolve_window(dst, x, w, 64, 1e-3); }, iters / 8 + 1);
    std::puts("");
  }

  // End-to-end right-hand-side evaluation.
  for (int nexp : {14, 17}) {
    const int n = 1 << nexp;
    const gchlab::Grid grid = gchlab::Grid::make(30.0, n);
    const gchlab::Field u = gchlab::sample(
        grid, [](double xx) { return 0.2 * std::exp(-xx * xx); });
    for (auto backend : {gchlab::BackendKind::Spectral,
                         gchlab::BackendKind::Fd2}) {
      const std::string name =
          std::string("gch_rhs ") + gchlab::to_string(backend);
      report(name.c_str(), static_cast<std::size_t>(n),
             [&] { gchlab::Field r = gchlab::gch_rhs(u, backend); }, 20);
    }
  }
  return 0;
}
