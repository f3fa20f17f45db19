/// \file dynamics.hpp
/// Right-hand side of the nonlocal evolution equation
///   u_t = 4 u u_x - u_x^2 + G_x*(2 u_x^2 + 6 u^2) + G*(u_x^2),
/// the RK4 method-of-lines integrator with CFL-limited steps, wave-breaking
/// detection and per-step diagnostics.

#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "gchlab/grid.hpp"
#include "gchlab/kernels.hpp"
#include "gchlab/operators.hpp"

namespace gchlab {

struct SolverConfig {
  BackendKind backend = BackendKind::Spectral;
  double cfl = 0.3;
  double t_end = 1.0;
  double dt_min = 1e-10;
  double blow_factor = 50.0;
  bool dealias = true;
  int snapshot_stride = 1;
  bool record_snapshots = true;

  void validate() const;
};

/// Slope magnitude below which the blow-up trigger never fires, regardless
/// of the relative growth factor.
inline constexpr double blowup_absolute_floor = 10.0;

struct DiagnosticsRow {
  double t = 0.0;
  double dt = 0.0;
  double energy = 0.0;      // h * sum(u^2 + u_x^2)
  double mass = 0.0;        // h * sum(u)
  double m_l1 = 0.0;        // L1 norm of m = u - u_xx
  double ux_inf = 0.0;      // max |u_x|
  double twisted_min = 0.0; // min of (2 - dx) m
};

enum class RunStatus { Completed, BlowUpDetected, StepFloorReached };
const char* to_string(RunStatus s);

struct RunResult {
  Field final_state;
  RunStatus status = RunStatus::Completed;
  double t_final = 0.0;
  std::vector<DiagnosticsRow> diagnostics;
  std::vector<std::pair<double, Field>> snapshots;
};

/// Thrown by sample_states when a run terminates before reaching a
/// requested sample time.
struct run_interrupted : std::runtime_error {
  run_interrupted(RunStatus s, double t)
      : std::runtime_error(std::string("run ended early: ") + to_string(s)),
        status(s), t_reached(t) {}
  RunStatus status;
  double t_reached;
};

using RhsFn = std::function<Field(const Field&)>;
using SpeedFn = std::function<double(const Field&)>;
using Observer = std::function<void(double t, const Field& state)>;

/// m = u - u_xx.
Field momentum(const Field& u, BackendKind backend);

/// m~ = 2 (2 - dx)(u - u_xx).
Field twisted_momentum(const Field& u, BackendKind backend);

/// Evolution right-hand side; quadratic products are 2/3-rule de-aliased
/// when requested (spectral backend only).
Field gch_rhs(const Field& u, BackendKind backend, bool dealias = true);

/// CFL velocity scale max(1, 4 |u|_inf + 2 |u_x|_inf).
double gch_speed(const Field& u, BackendKind backend);

DiagnosticsRow diagnostics(const Field& u, double t, double dt,
                           BackendKind backend);

/// One classical RK4 step. Throws numerical_error on a non-finite stage.
template <class Rhs>
Field step_rk4(const Field& state, double dt, Rhs&& rhs) {
  if (!(dt > 0.0)) throw std::invalid_argument("step_rk4: dt must be positive");
  auto stage_state = [&](const Field& base, double c, const Field& k) {
    Field s(base.grid);
    kernels::combine(s.span(), 1.0, base.span(), c * dt, k.span());
    return s;
  };
  const Field k1 = rhs(state);
  ensure_finite(k1, "rk4 stage 1");
  const Field k2 = rhs(stage_state(state, 0.5, k1));
  ensure_finite(k2, "rk4 stage 2");
  const Field k3 = rhs(stage_state(state, 0.5, k2));
  ensure_finite(k3, "rk4 stage 3");
  const Field k4 = rhs(stage_state(state, 1.0, k3));
  ensure_finite(k4, "rk4 stage 4");
  Field out = state;
  kernels::rk4_update(out.span(), k1.span(), k2.span(), k3.span(), k4.span(),
                      dt);
  ensure_finite(out, "rk4 update");
  return out;
}

/// Generic method-of-lines driver shared by the gCH and DP solvers.
RunResult integrate(const Field& u0, const SolverConfig& cfg, const RhsFn& rhs,
                    const SpeedFn& speed, const Observer& observer = {});

/// Advances the gCH equation from u0.
RunResult run(const Field& u0, const SolverConfig& cfg,
              const Observer& observer = {});

/// States at the given (sorted, nonnegative) times, obtained by running the
/// integrator segment by segment. Throws run_interrupted when the run stops
/// before the last requested time.
std::vector<Field> sample_states(const Field& u0, const SolverConfig& cfg,
                                 const RhsFn& rhs, const SpeedFn& speed,
                                 std::span<const double> times);

} // namespace gchlab
