#include "gchlab/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "gchlab/kernels.hpp"

namespace gchlab {

void SolverConfig::validate() const {
  if (!(cfl > 0.0 && cfl <= 1.0))
    throw std::invalid_argument("cfl must lie in (0, 1]");
  if (!(t_end > 0.0)) throw std::invalid_argument("t_end must be positive");
  if (!(dt_min > 0.0)) throw std::invalid_argument("dt_min must be positive");
  if (!(blow_factor > 1.0))
    throw std::invalid_argument("blow_factor must exceed 1");
  if (snapshot_stride < 1)
    throw std::invalid_argument("snapshot_stride must be >= 1");
}

const char* to_string(RunStatus s) {
  switch (s) {
    case RunStatus::Completed: return "Completed";
    case RunStatus::BlowUpDetected: return "BlowUpDetected";
    case RunStatus::StepFloorReached: return "StepFloorReached";
  }
  return "?";
}

Field momentum(const Field& u, BackendKind backend) {
  const Field uxx = second_derivative(u, backend);
  Field m(u.grid);
  kernels::combine(m.span(), 1.0, u.span(), -1.0, uxx.span());
  return m;
}

Field twisted_momentum(const Field& u, BackendKind backend) {
  const Field m = momentum(u, backend);
  const Field mx = derivative(m, backend);
  Field out(u.grid);
  kernels::combine(out.span(), 4.0, m.span(), -2.0, mx.span());
  return out;
}

Field gch_rhs(const Field& u, BackendKind backend, bool dealias) {
  ensure_finite(u, "gch_rhs");
  const bool trunc = dealias && backend == BackendKind::Spectral;
  const Field ux = derivative(u, backend);

  Field uux(u.grid), uxux(u.grid), uu(u.grid);
  kernels::multiply(uux.span(), u.span(), ux.span());
  kernels::multiply(uxux.span(), ux.span(), ux.span());
  kernels::multiply(uu.span(), u.span(), u.span());
  if (trunc) {
    uux = dealias_23(uux);
    uxux = dealias_23(uxux);
    uu = dealias_23(uu);
  }

  // 4 u u_x - u_x^2 + G_x*(2 u_x^2 + 6 u^2) + G*(u_x^2)
  Field conv_arg(u.grid);
  kernels::combine(conv_arg.span(), 2.0, uxux.span(), 6.0, uu.span());
  const Field nonlocal = green_derivative_convolve(conv_arg, backend);
  const Field smooth = helmholtz_inverse(uxux, backend);

  Field out(u.grid);
  kernels::combine(out.span(), 4.0, uux.span(), -1.0, uxux.span());
  kernels::add_scaled(out.span(), nonlocal.span(), 1.0);
  kernels::add_scaled(out.span(), smooth.span(), 1.0);
  return out;
}

double gch_speed(const Field& u, BackendKind backend) {
  const Field ux = derivative(u, backend);
  return std::max(1.0, 4.0 * kernels::max_abs(u.span()) +
                           2.0 * kernels::max_abs(ux.span()));
}

DiagnosticsRow diagnostics(const Field& u, double t, double dt,
                           BackendKind backend) {
  ensure_finite(u, "diagnostics");
  const double h = u.grid.spacing;
  const Field ux = derivative(u, backend);
  const Field m = momentum(u, backend);
  const Field mx = derivative(m, backend);
  Field twisted(u.grid);
  kernels::combine(twisted.span(), 2.0, m.span(), -1.0, mx.span());

  DiagnosticsRow row;
  row.t = t;
  row.dt = dt;
  row.energy = h * (kernels::sum_sq(u.span()) + kernels::sum_sq(ux.span()));
  row.mass = h * kernels::sum(u.span());
  row.m_l1 = h * kernels::sum_abs(m.span());
  row.ux_inf = kernels::max_abs(ux.span());
  row.twisted_min = kernels::min_value(twisted.span());
  return row;
}

RunResult integrate(const Field& u0, const SolverConfig& cfg, const RhsFn& rhs,
                    const SpeedFn& speed, const Observer& observer) {
  cfg.validate();
  ensure_finite(u0, "integrate initial data");

  RunResult result;
  Field state = u0;
  double t = 0.0;
  long step_index = 0;

  DiagnosticsRow row = diagnostics(state, t, 0.0, cfg.backend);
  result.diagnostics.push_back(row);
  if (cfg.record_snapshots) result.snapshots.emplace_back(t, state);
  if (observer) observer(t, state);
  const double ux_inf0 = row.ux_inf;

  const double t_tol = 1e-12 * std::max(1.0, cfg.t_end);
  RunStatus status = RunStatus::Completed;

  while (cfg.t_end - t > t_tol) {
    const double dt_cfl = cfg.cfl * u0.grid.spacing / speed(state);
    if (dt_cfl < cfg.dt_min) {
      status = RunStatus::StepFloorReached;
      break;
    }
    const double dt = std::min(dt_cfl, cfg.t_end - t);

    state = step_rk4(state, dt, rhs);
    t += dt;
    ++step_index;

    row = diagnostics(state, t, dt, cfg.backend);
    result.diagnostics.push_back(row);
    if (observer) observer(t, state);
    if (cfg.record_snapshots && step_index % cfg.snapshot_stride == 0)
      result.snapshots.emplace_back(t, state);

    if (row.ux_inf > cfg.blow_factor * ux_inf0 &&
        row.ux_inf > blowup_absolute_floor) {
      status = RunStatus::BlowUpDetected;
      break;
    }
  }

  if (cfg.record_snapshots && (result.snapshots.empty() ||
                               result.snapshots.back().first != t))
    result.snapshots.emplace_back(t, state);

  result.final_state = std::move(state);
  result.status = status;
  result.t_final = t;
  return result;
}

RunResult run(const Field& u0, const SolverConfig& cfg,
              const Observer& observer) {
  const BackendKind backend = cfg.backend;
  const bool dealias = cfg.dealias;
  return integrate(
      u0, cfg, [=](const Field& u) { return gch_rhs(u, backend, dealias); },
      [=](const Field& u) { return gch_speed(u, backend); }, observer);
}

std::vector<Field> sample_states(const Field& u0, const SolverConfig& cfg,
                                 const RhsFn& rhs, const SpeedFn& speed,
                                 std::span<const double> times) {
  std::vector<Field> states;
  states.reserve(times.size());
  Field state = u0;
  double t_prev = 0.0;
  for (double target : times) {
    if (target < t_prev)
      throw std::invalid_argument("sample times must be nondecreasing");
    if (target > t_prev) {
      SolverConfig segment = cfg;
      segment.t_end = target - t_prev;
      segment.record_snapshots = false;
      RunResult r = integrate(state, segment, rhs, speed);
      if (r.status != RunStatus::Completed)
        throw run_interrupted(r.status, t_prev + r.t_final);
      state = std::move(r.final_state);
      t_prev = target;
    }
    states.push_back(state);
  }
  return states;
}

} // namespace gchlab
