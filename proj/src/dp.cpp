#include "gchlab/dp.hpp"

#include <cmath>
#include <sstream>

#include "gchlab/kernels.hpp"
#include "gchlab/threading.hpp"

namespace gchlab {

Field dp_rhs(const Field& v, BackendKind backend, bool dealias) {
  ensure_finite(v, "dp_rhs");
  const bool trunc = dealias && backend == BackendKind::Spectral;
  const Field vx = derivative(v, backend);

  Field vvx(v.grid), vv(v.grid);
  kernels::multiply(vvx.span(), v.span(), vx.span());
  kernels::multiply(vv.span(), v.span(), v.span());
  if (trunc) {
    vvx = dealias_23(vvx);
    vv = dealias_23(vv);
  }

  const Field nonlocal = green_derivative_convolve(vv, backend);
  Field out = vvx;
  kernels::add_scaled(out.span(), nonlocal.span(), 1.5);
  return out;
}

Field to_dp(const Field& u, BackendKind backend) {
  ensure_finite(u, "to_dp");
  const Field ux = derivative(u, backend);
  Field out(u.grid);
  kernels::combine(out.span(), 4.0, u.span(), -2.0, ux.span());
  return out;
}

Field from_dp(const Field& v, BackendKind backend) {
  ensure_finite(v, "from_dp");
  Field half = v;
  kernels::scale(half.span(), 0.5);
  return invert_shifted_derivative(half, backend);
}

Field dp_peakon(double c, double x0, const Grid& grid) {
  if (!(std::abs(x0) < grid.half_width))
    throw std::invalid_argument("peakon center must lie inside the domain");
  return sample(grid,
                [&](double x) { return c * std::exp(-std::abs(x - x0)); });
}

double dp_speed(const Field& v) {
  return std::max(1.0, kernels::max_abs(v.span()));
}

RunResult run_dp(const Field& v0, const SolverConfig& cfg,
                 const Observer& observer) {
  const BackendKind backend = cfg.backend;
  const bool dealias = cfg.dealias;
  return integrate(
      v0, cfg, [=](const Field& v) { return dp_rhs(v, backend, dealias); },
      [](const Field& v) { return dp_speed(v); }, observer);
}

namespace {

std::string fingerprint(const char* equation, const Grid& g,
                        const SolverConfig& cfg) {
  std::ostringstream os;
  os << equation << ":" << to_string(cfg.backend) << ";N=" << g.n
     << ";L=" << g.half_width << ";cfl=" << cfg.cfl
     << ";dealias=" << (cfg.dealias ? 1 : 0) << ";t_end=" << cfg.t_end;
  return os.str();
}

} // namespace

BridgeReport bridge_compare(const Field& u0, const SolverConfig& cfg,
                            std::span<const double> sample_times) {
  ensure_finite(u0, "bridge_compare");
  const BackendKind backend = cfg.backend;
  const bool dealias = cfg.dealias;

  BridgeReport report;
  report.sample_times.assign(sample_times.begin(), sample_times.end());
  report.gch_fingerprint = fingerprint("gch", u0.grid, cfg);
  report.dp_fingerprint = fingerprint("dp", u0.grid, cfg);

  std::vector<Field> gch_states, dp_states;
  std::string side_error[2];
  std::optional<RunStatus> side_status[2];

  const Field v0 = to_dp(u0, backend);
  parallel_tasks(2, [&](int side) {
    try {
      if (side == 0) {
        gch_states = sample_states(
            u0, cfg, [=](const Field& u) { return gch_rhs(u, backend, dealias); },
            [=](const Field& u) { return gch_speed(u, backend); }, sample_times);
      } else {
        dp_states = sample_states(
            v0, cfg, [=](const Field& v) { return dp_rhs(v, backend, dealias); },
            [](const Field& v) { return dp_speed(v); }, sample_times);
      }
    } catch (const run_interrupted& e) {
      side_error[side] = e.what();
      side_status[side] = e.status;
    } catch (const std::exception& e) {
      side_error[side] = e.what();
    }
  });

  if (!side_error[0].empty() || !side_error[1].empty()) {
    const int side = side_error[0].empty() ? 1 : 0;
    report.ok = false;
    report.failed_side = side == 0 ? "gch" : "dp";
    report.failure = side_error[side];
    report.failed_status = side_status[side];
    return report;
  }

  report.rel_l2_error.reserve(sample_times.size());
  for (std::size_t i = 0; i < sample_times.size(); ++i) {
    const Field mapped = to_dp(gch_states[i], backend);
    Field diff(mapped.grid);
    kernels::combine(diff.span(), 1.0, mapped.span(), -1.0,
                     dp_states[i].span());
    const double denom =
        std::max(norm(dp_states[i], NormKind::L2, backend), 1e-14);
    report.rel_l2_error.push_back(norm(diff, NormKind::L2, backend) / denom);
  }
  return report;
}

} // namespace gchlab
