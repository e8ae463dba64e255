#pragma once

// Log-free replacements for B = ln(R) - 0.779397488 over R in [4000, 1e8]:
// a /2,3/ rational (Pade) approximant s(r) of ln(r) expanded at r = 1 with
// r = R/315012.6, plus two polynomial corrections of s that bring the
// replacement error down to under a tenth of a percent. Feeding the result
// into the eq3 structure yields a friction approximation with exactly one
// logarithm evaluation.

#include "frictionlab/core.hpp"

namespace frictionlab {

/// Centering constant: r = R / 315012.6 maps the validated Reynolds band
/// to r in [0.0127, 317.4] with r = 1 at the expansion point.
inline constexpr double kReynoldsScale = 315012.6;

/// r = R / 315012.6 (exact division; R > 0 required).
double compute_r(double reynolds);

/// The /2,3/ rational approximant of ln(r) at r = 1, in nested form:
///   s = (r*(r*(11r + 27) - 27) - 11) / (r*(r*(3r + 27) + 27) + 3)
/// s(1) = 0 exactly. Raw accuracy is only ~12% in reconstructed-log terms
/// at the interval borders; the b_* corrections below repair that.
double pade_s(double r);

/// Corrected log-free B (full-precision correction constants):
///   B = 0.98236*s + s^7/9200.67 + r/150.2325 - r^2/138187.1651
///       - 1/(161.124*r) + 11.881
/// Valid only for R in [4000, 1e8]; throws std::domain_error outside
/// (the rational fit has no validity beyond its construction interval).
double compute_b_rational(double reynolds);

/// Horner-form corrected B (rounded 4-digit constants, same shape):
///   B = s*(0.0001086*s^6 + 0.9824) - 0.006206/r - r*(0.000007237*r - 0.006656)
///       + 11.881
/// Same validity interval and error policy as compute_b_rational.
double compute_b_horner(double reynolds);

/// eq3 structure evaluated with B from compute_b_horner: the one-log
/// friction approximation (ln(B+A) is the only logarithm).
FrictionResult friction_onelog(const FlowConditions& cond);

}  // namespace frictionlab
