#include "gchlab/mollify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gchlab/kernels.hpp"
#include "gchlab/threading.hpp"

namespace gchlab {

namespace {

double bump(double y) {
  const double d = y * y - 1.0;
  if (d >= 0.0) return 0.0;
  return std::exp(1.0 / d);
}

} // namespace

Field mollifier_kernel(int n, const Grid& grid) {
  if (n < 1) throw std::invalid_argument("mollifier level n must be >= 1");
  if (grid.spacing > 1.0 / (4.0 * n))
    throw std::invalid_argument(
        "mollifier support under-resolved: need h <= 1/(4n)");

  Field kernel = sample(grid, [&](double x) { return n * bump(n * x); });
  // Normalize against the discrete integral so h * sum == 1 exactly; the
  // accumulation runs in extended precision to keep the enforced identity
  // at the last double bit.
  long double s = 0.0L;
  for (double v : kernel.values) s += v;
  s *= static_cast<long double>(grid.spacing);
  if (!(s > 0.0L))
    throw std::invalid_argument("mollifier kernel vanished on this grid");
  const double inv = static_cast<double>(1.0L / s);
  kernels::scale(kernel.span(), inv);
  return kernel;
}

Field mollify(const Field& f, int n) {
  ensure_finite(f, "mollify");
  const Field kernel = mollifier_kernel(n, f.grid);

  // The kernel is centered on the x = 0 node; collect its support window.
  const int center = f.grid.n / 2;
  int halfwidth = 0;
  for (int d = 1; d < f.grid.n / 2; ++d) {
    if (kernel[static_cast<std::size_t>(center - d)] == 0.0 &&
        kernel[static_cast<std::size_t>(center + d)] == 0.0)
      break;
    halfwidth = d;
  }
  std::vector<double> weights(static_cast<std::size_t>(2 * halfwidth + 1));
  for (int d = -halfwidth; d <= halfwidth; ++d)
    weights[static_cast<std::size_t>(d + halfwidth)] =
        kernel[static_cast<std::size_t>(center + d)];

  Field out(f.grid);
  kernels::convolve_window(out.span(), f.span(), weights, halfwidth,
                           f.grid.spacing);
  return out;
}

StudyReport weak_convergence_study(const Field& u0,
                                   std::span<const int> n_values,
                                   const SolverConfig& cfg) {
  ensure_finite(u0, "weak_convergence_study");
  cfg.validate();

  StudyReport report;
  report.n_values.assign(n_values.begin(), n_values.end());

  const Field m0 = momentum(u0, cfg.backend);
  const Field m0x = derivative(m0, cfg.backend);
  Field density(u0.grid); // 2 m0 - m0'
  kernels::combine(density.span(), 2.0, m0.span(), -1.0, m0x.span());
  report.bound_constant =
      3.0 * norm(u0, NormKind::H1, cfg.backend) + 2.0 * measure_norm(density);

  const int count = static_cast<int>(n_values.size());
  report.entries.resize(static_cast<std::size_t>(count));
  std::vector<Field> finals(static_cast<std::size_t>(count));

  parallel_tasks(count, [&](int idx) {
    const int n = n_values[static_cast<std::size_t>(idx)];
    StudyEntry& entry = report.entries[static_cast<std::size_t>(idx)];
    entry.n = n;
    entry.bound_constant = report.bound_constant;
    try {
      const Field u0n = mollify(u0, n);
      Field diff(u0.grid);
      kernels::combine(diff.span(), 1.0, u0n.span(), -1.0, u0.span());
      entry.h1_error = norm(diff, NormKind::H1, cfg.backend);

      double h2_sup = 0.0;
      SolverConfig run_cfg = cfg;
      run_cfg.record_snapshots = false;
      const BackendKind backend = cfg.backend;
      RunResult r = run(u0n, run_cfg, [&](double, const Field& state) {
        h2_sup = std::max(h2_sup, norm(state, NormKind::H2, backend));
      });
      entry.h2_sup = h2_sup;
      entry.status = to_string(r.status);
      entry.ok = r.status == RunStatus::Completed;

      const double e0 = r.diagnostics.front().energy;
      double drift = 0.0;
      for (const auto& row : r.diagnostics)
        drift = std::max(drift, std::abs(row.energy - e0));
      entry.energy_drift = drift / std::max(e0, 1e-300);

      finals[static_cast<std::size_t>(idx)] = std::move(r.final_state);
    } catch (const std::exception& e) {
      entry.ok = false;
      entry.status = e.what();
    }
  });

  const double nan = std::numeric_limits<double>::quiet_NaN();
  report.pairwise_l2.assign(static_cast<std::size_t>(count),
                            std::vector<double>(static_cast<std::size_t>(count),
                                                nan));
  for (int i = 0; i < count; ++i) {
    if (!report.entries[static_cast<std::size_t>(i)].ok) continue;
    for (int j = 0; j < count; ++j) {
      if (!report.entries[static_cast<std::size_t>(j)].ok) continue;
      Field diff(u0.grid);
      kernels::combine(diff.span(), 1.0,
                       finals[static_cast<std::size_t>(i)].span(), -1.0,
                       finals[static_cast<std::size_t>(j)].span());
      report.pairwise_l2[static_cast<std::size_t>(i)]
                        [static_cast<std::size_t>(j)] =
          norm(diff, NormKind::L2, cfg.backend);
    }
  }
  return report;
}

GronwallReport gronwall_check(const Field& u0, const Field& v0,
                              const SolverConfig& cfg,
                              std::span<const double> sample_times) {
  ensure_same_grid(u0, v0, "gronwall_check");
  ensure_finite(u0, "gronwall_check");
  ensure_finite(v0, "gronwall_check");
  cfg.validate();

  const BackendKind backend = cfg.backend;
  const bool dealias = cfg.dealias;
  const RhsFn rhs = [=](const Field& u) { return gch_rhs(u, backend, dealias); };
  const SpeedFn speed = [=](const Field& u) { return gch_speed(u, backend); };

  std::vector<Field> u_states, v_states;
  parallel_tasks(2, [&](int side) {
    if (side == 0)
      u_states = sample_states(u0, cfg, rhs, speed, sample_times);
    else
      v_states = sample_states(v0, cfg, rhs, speed, sample_times);
  });

  auto distance = [&](const Field& u, const Field& v) {
    Field w(u.grid);
    kernels::combine(w.span(), 1.0, u.span(), -1.0, v.span());
    const Field wx = derivative(w, backend);
    return norm(w, NormKind::L1, backend) + norm(wx, NormKind::L1, backend);
  };

  GronwallReport report;
  double m_const = 0.0;
  for (std::size_t i = 0; i < sample_times.size(); ++i)
    m_const = std::max(
        m_const, measure_norm(momentum(u_states[i], backend)) +
                     measure_norm(momentum(v_states[i], backend)));
  report.m_constant = m_const;
  report.d0 = distance(u0, v0);

  report.satisfied = true;
  report.series.reserve(sample_times.size());
  for (std::size_t i = 0; i < sample_times.size(); ++i) {
    GronwallSample s;
    s.t = sample_times[i];
    s.distance = distance(u_states[i], v_states[i]);
    s.bound = report.d0 * std::exp(36.0 * m_const * s.t);
    if (s.distance > s.bound) report.satisfied = false;
    report.series.push_back(s);
  }
  return report;
}

} // namespace gchlab
