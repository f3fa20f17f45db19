/// \file criteria.hpp
/// Sign-pattern classification of initial data. The sign structure of the
/// twisted momentum m~0 = 2 (2 - dx)(u0 - u0_xx) decides between guaranteed
/// global existence and guaranteed finite-time wave breaking; a separate
/// slope threshold on v0 = 2 (2 - dx) u0 gives an explicit upper bound on
/// the breaking time.

#pragma once

#include <optional>

#include "gchlab/grid.hpp"

namespace gchlab {

enum class SignKind { NonNegative, NonPositive, NegThenPos, PosThenNeg, Mixed };
const char* to_string(SignKind k);

struct SignPattern {
  SignKind kind = SignKind::Mixed;
  std::optional<double> crossing; // present iff kind is one-crossing
  double zero_tol = 0.0;          // relative tolerance used
};

enum class Verdict { GlobalThm31, GlobalThm32, BlowUpThm33, Inconclusive };
const char* to_string(Verdict v);

struct ThresholdRecord {
  double epsilon = 0.0;
  double min_slope = 0.0;     // min over the grid of v0'
  double rhs_threshold = 0.0; // breaking threshold for -v0'
  bool satisfied = false;
  std::optional<double> t_star; // breaking-time bound, present iff satisfied
};

struct ClassificationReport {
  SignPattern pattern_m_twisted;
  bool m0_changes_sign = false;
  Verdict verdict = Verdict::Inconclusive;
  std::optional<ThresholdRecord> threshold34;
};

/// Entries with |f_i| <= zero_tol * |f|_inf count as zero; the kind follows
/// from the sequence of strict signs. Throws on an all-zero field.
SignPattern sign_pattern(const Field& f, double zero_tol = 1e-9);

/// The decision table mapping (pattern of m~0, sign change of m0) to a
/// verdict; exposed separately so it can be property-tested exhaustively.
Verdict decide_verdict(SignKind pattern_m_twisted, bool m0_changes_sign);

/// Classifies u0. When epsilon is given, also evaluates the slope threshold
/// and breaking-time bound on v0 = 2 (2 - dx) u0.
ClassificationReport classify_initial(
    const Field& u0, BackendKind backend,
    std::optional<double> epsilon = std::nullopt);

struct BreakingThreshold {
  double min_slope = 0.0;
  double rhs_threshold = 0.0;
  bool satisfied = false;
};

/// Slope threshold: breaking is guaranteed when
///   min v0' < -((1+eps) sqrt(6)/4) (|v0|_inf
///             + sqrt(2 sqrt(6) |v0|_L2^2 ln(1 + 2/eps) + |v0|_inf^2)).
BreakingThreshold breaking_threshold(const Field& v0, double epsilon,
                                     BackendKind backend);

/// Upper bound on the maximal existence time,
///   T* = (sqrt(2 sqrt(6) |v0|_L2^2 ln(1 + 2/eps) + |v0|_inf^2) - |v0|_inf)
///        / (6 |v0|_L2^2).
/// Only meaningful when breaking_threshold(...).satisfied holds.
double blowup_time_bound(const Field& v0, double epsilon, BackendKind backend);

} // namespace gchlab
