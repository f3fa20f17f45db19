#include "gchlab/criteria.hpp"

#include <cmath>
#include <numbers>

#include "gchlab/dp.hpp"
#include "gchlab/dynamics.hpp"
#include "gchlab/kernels.hpp"
#include "gchlab/operators.hpp"

namespace gchlab {

const char* to_string(SignKind k) {
  switch (k) {
    case SignKind::NonNegative: return "NonNegative";
    case SignKind::NonPositive: return "NonPositive";
    case SignKind::NegThenPos: return "NegThenPos";
    case SignKind::PosThenNeg: return "PosThenNeg";
    case SignKind::Mixed: return "Mixed";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::GlobalThm31: return "GlobalThm31";
    case Verdict::GlobalThm32: return "GlobalThm32";
    case Verdict::BlowUpThm33: return "BlowUpThm33";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

SignPattern sign_pattern(const Field& f, double zero_tol) {
  ensure_finite(f, "sign_pattern");
  const double scale = kernels::max_abs(f.span());
  if (scale == 0.0)
    throw std::invalid_argument("sign_pattern: degenerate field");
  const double tol = zero_tol * scale;

  // Indices of strictly signed entries, in grid order.
  int transitions = 0;
  int first_sign = 0, last_sign = 0;
  int last_neg = -1, first_pos = -1, last_pos = -1, first_neg = -1;
  for (int i = 0; i < f.size(); ++i) {
    const double v = f[static_cast<std::size_t>(i)];
    if (std::abs(v) <= tol) continue;
    const int s = v > 0.0 ? 1 : -1;
    if (first_sign == 0) first_sign = s;
    if (last_sign != 0 && s != last_sign) ++transitions;
    last_sign = s;
    if (s > 0) {
      if (first_pos < 0) first_pos = i;
      last_pos = i;
    } else {
      if (first_neg < 0) first_neg = i;
      last_neg = i;
    }
  }
  if (first_sign == 0)
    throw std::invalid_argument("sign_pattern: degenerate field");

  SignPattern pattern;
  pattern.zero_tol = zero_tol;
  if (transitions == 0) {
    pattern.kind =
        first_sign > 0 ? SignKind::NonNegative : SignKind::NonPositive;
  } else if (transitions == 1 && first_sign < 0) {
    pattern.kind = SignKind::NegThenPos;
    pattern.crossing =
        0.5 * (f.grid.node(last_neg) + f.grid.node(first_pos));
  } else if (transitions == 1) {
    pattern.kind = SignKind::PosThenNeg;
    pattern.crossing =
        0.5 * (f.grid.node(last_pos) + f.grid.node(first_neg));
  } else {
    pattern.kind = SignKind::Mixed;
  }
  return pattern;
}

Verdict decide_verdict(SignKind pattern_m_twisted, bool m0_changes_sign) {
  switch (pattern_m_twisted) {
    case SignKind::NonNegative:
    case SignKind::NonPositive:
      return Verdict::GlobalThm31;
    case SignKind::NegThenPos:
      return Verdict::GlobalThm32;
    case SignKind::PosThenNeg:
      // The blow-up theorem additionally needs m0 itself to change sign.
      return m0_changes_sign ? Verdict::BlowUpThm33 : Verdict::Inconclusive;
    case SignKind::Mixed:
      return Verdict::Inconclusive;
  }
  return Verdict::Inconclusive;
}

ClassificationReport classify_initial(const Field& u0, BackendKind backend,
                                      std::optional<double> epsilon) {
  ensure_finite(u0, "classify_initial");
  const Field m0 = momentum(u0, backend);
  const Field m0_twisted = twisted_momentum(u0, backend);

  ClassificationReport report;
  report.pattern_m_twisted = sign_pattern(m0_twisted);
  const SignPattern m0_pattern = sign_pattern(m0);
  report.m0_changes_sign = m0_pattern.kind != SignKind::NonNegative &&
                           m0_pattern.kind != SignKind::NonPositive;
  report.verdict =
      decide_verdict(report.pattern_m_twisted.kind, report.m0_changes_sign);

  if (epsilon) {
    const Field v0 = to_dp(u0, backend);
    const BreakingThreshold th = breaking_threshold(v0, *epsilon, backend);
    ThresholdRecord rec;
    rec.epsilon = *epsilon;
    rec.min_slope = th.min_slope;
    rec.rhs_threshold = th.rhs_threshold;
    rec.satisfied = th.satisfied;
    if (th.satisfied) rec.t_star = blowup_time_bound(v0, *epsilon, backend);
    report.threshold34 = rec;
  }
  return report;
}

BreakingThreshold breaking_threshold(const Field& v0, double epsilon,
                                     BackendKind backend) {
  if (!(epsilon > 0.0))
    throw std::invalid_argument("breaking_threshold: epsilon must be positive");
  ensure_finite(v0, "breaking_threshold");
  const double v_inf = norm(v0, NormKind::Linf, backend);
  if (v_inf == 0.0)
    throw std::invalid_argument("breaking_threshold: zero field");
  const double l2 = norm(v0, NormKind::L2, backend);
  const Field slope = derivative(v0, backend);

  BreakingThreshold out;
  out.min_slope = kernels::min_value(slope.span());
  const double root = std::sqrt(2.0 * std::sqrt(6.0) * l2 * l2 *
                                    std::log1p(2.0 / epsilon) +
                                v_inf * v_inf);
  out.rhs_threshold =
      (1.0 + epsilon) * std::sqrt(6.0) / 4.0 * (v_inf + root);
  out.satisfied = out.min_slope < -out.rhs_threshold;
  return out;
}

double blowup_time_bound(const Field& v0, double epsilon,
                         BackendKind backend) {
  if (!(epsilon > 0.0))
    throw std::invalid_argument("blowup_time_bound: epsilon must be positive");
  ensure_finite(v0, "blowup_time_bound");
  const double l2 = norm(v0, NormKind::L2, backend);
  if (l2 == 0.0)
    throw std::invalid_argument("blowup_time_bound: zero L2 norm");
  const double v_inf = norm(v0, NormKind::Linf, backend);
  const double root = std::sqrt(2.0 * std::sqrt(6.0) * l2 * l2 *
                                    std::log1p(2.0 / epsilon) +
                                v_inf * v_inf);
  return (root - v_inf) / (6.0 * l2 * l2);
}

} // namespace gchlab
