/// \file mollify.hpp
/// Compactly supported smoothing kernels rho_n(x) = n rho(n x) / int(rho)
/// with the bump rho(x) = exp(1/(x^2-1)) on |x| < 1, plus the two studies
/// built on them: solver convergence under mollified initial data (with the
/// a priori bound 3 |u0|_H1 + 2 |2 m0 - m0'|_M on the H2 norm) and the
/// exp(36 M t) two-solution stability bound.

#pragma once

#include <string>

#include "gchlab/dynamics.hpp"

namespace gchlab {

/// Samples rho_n on the grid and rescales so the discrete integral is
/// exactly 1. Requires h <= 1/(4n) so the support is resolved.
Field mollifier_kernel(int n, const Grid& grid);

/// Cyclic convolution h * (rho_n (*) f).
Field mollify(const Field& f, int n);

struct StudyEntry {
  int n = 0;
  bool ok = false;
  std::string status;         // run status or failure description
  double h1_error = 0.0;      // |rho_n * u0 - u0|_H1
  double h2_sup = 0.0;        // sup_t |u^n(t)|_H2 over accepted steps
  double energy_drift = 0.0;  // max_t |E(t) - E(0)| / E(0)
  double bound_constant = 0.0;
};

struct StudyReport {
  std::vector<int> n_values;
  std::vector<StudyEntry> entries;
  /// pairwise_l2[i][j] = |u^{n_i}(t_end) - u^{n_j}(t_end)|_L2;
  /// NaN where either run failed.
  std::vector<std::vector<double>> pairwise_l2;
  double bound_constant = 0.0; // 3 |u0|_H1 + 2 |2 m0 - m0'|_M
};

/// Runs the solver from mollify(u0, n) for each n; per-n failures are
/// recorded in the entry rather than aborting the study. Sub-runs may
/// execute concurrently (GCHLAB_THREADS).
StudyReport weak_convergence_study(const Field& u0,
                                   std::span<const int> n_values,
                                   const SolverConfig& cfg);

struct GronwallSample {
  double t = 0.0;
  double distance = 0.0; // |w|_L1 + |w_x|_L1 with w = u - v
  double bound = 0.0;    // d(0) * exp(36 M t)
};

struct GronwallReport {
  double m_constant = 0.0; // sup_t (|u - u_xx|_M + |v - v_xx|_M)
  double d0 = 0.0;
  std::vector<GronwallSample> series;
  bool satisfied = false;
};

/// Evolves u0 and v0 with the same configuration and checks the distance
/// d(t) = |w|_L1 + |w_x|_L1 against d(0) exp(36 M t) at the sample times.
GronwallReport gronwall_check(const Field& u0, const Field& v0,
                              const SolverConfig& cfg,
                              std::span<const double> sample_times);

} // namespace gchlab
