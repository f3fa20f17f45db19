/// \file dp.hpp
/// The exact correspondence with the Degasperis-Procesi equation: the linear
/// transform v = 2 (2 - dx) u intertwines the two flows, so an independent
/// DP solve cross-validates the gCH solver.
///
/// Sign convention: the DP form used here is the spatial reflection
/// x -> -x of the standard one; its peakons c*exp(-|x - x0|) travel with
/// velocity -c.

#pragma once

#include "gchlab/dynamics.hpp"

#include <string>

namespace gchlab {

/// DP right-hand side v_t = v v_x + (3/2) G_x*(v^2).
Field dp_rhs(const Field& v, BackendKind backend, bool dealias = true);

/// v = 4u - 2 u_x.
Field to_dp(const Field& u, BackendKind backend);

/// Inverse transform: solves (2 - dx) u = v / 2.
Field from_dp(const Field& v, BackendKind backend);

/// Samples the peakon profile c * exp(-|x - x0|).
Field dp_peakon(double c, double x0, const Grid& grid);

/// CFL velocity scale max(1, |v|_inf).
double dp_speed(const Field& v);

/// Advances the DP equation from v0 with the shared integrator.
RunResult run_dp(const Field& v0, const SolverConfig& cfg,
                 const Observer& observer = {});

struct BridgeReport {
  std::vector<double> sample_times;
  std::vector<double> rel_l2_error; // one entry per sample time
  std::string gch_fingerprint;
  std::string dp_fingerprint;
  bool ok = true;
  std::string failed_side; // "gch" or "dp" when !ok
  std::string failure;     // human-readable failure description
  std::optional<RunStatus> failed_status; // set when a run stopped early
};

/// Runs gCH from u0 and DP from to_dp(u0) and reports the relative L2
/// discrepancy of to_dp(u_gch(t)) against v_dp(t) at each sample time.
/// The two solves may execute concurrently (GCHLAB_THREADS).
BridgeReport bridge_compare(const Field& u0, const SolverConfig& cfg,
                            std::span<const double> sample_times);

} // namespace gchlab
