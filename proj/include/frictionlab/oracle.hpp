#pragma once

// High-precision reference solutions of the implicit Colebrook relation:
// an iterative fixed-point solver, an exact explicit form built on the
// omega function (the solution w of w + ln w = x), the truncated-series
// approximant of omega, and a deliberately naive W(e^x) evaluation that
// demonstrates binary64 overflow for large x.

#include "frictionlab/core.hpp"

namespace frictionlab {

/// Transformed argument x of the explicit solution. For inputs inside the
/// validated domain, x lies in (7.51, 618188).
///   x = ln(R/2.51 * ln(10)/2) + R*eps/(2.51*3.71) * ln(10)/2
double compute_x(const FlowConditions& cond);

/// Solves w + ln w = x for w > 0, x >= 1. Seeds with the truncated series
/// x - ln x + ln x / x and refines with Halley steps on g(w) = w + ln w - x
/// until the relative step falls below 1e-15 (cap 64 iterations; throws
/// std::runtime_error on non-convergence, which does not occur for x >= 1).
/// Never forms e^x, so it cannot overflow.
double wright_omega(double x);

/// Truncated-series approximant y = x - ln x + ln x / x (valid for x > 1).
double series_y(double x);

/// Reference friction factor: fixed-point iteration
///   u <- -2*log10(2.51*u/R + eps/3.71)
/// from u0 = 10 until |du| < 1e-13 (cap 100), then one Newton polish step.
/// The returned f satisfies |colebrook_residual| < 1e-12 on the domain.
FrictionResult friction_reference(const FlowConditions& cond);

/// Exact explicit solution: u = (2/ln 10) * (ln(R/2.51 * ln10/2) - ln w),
/// where w solves w + ln w = x. The difference w - x is folded into -ln w
/// algebraically, so no catastrophic cancellation occurs at large x.
FrictionResult friction_exact_lambert(const FlowConditions& cond);

/// Outcome of evaluating W(e^x) the naive way: forming t = e^x in binary64
/// first. Overflows (and reports it) once x exceeds ln(DBL_MAX) ~ 709.78.
struct NaiveWResult {
    bool overflow = false;
    double value = 0.0;  ///< W(e^x) when no overflow occurred
};

/// Naive W(e^x): computes t = exp(x); if t is infinite the overflow flag is
/// set. Otherwise solves w*e^w = t (through the stable log-form iteration)
/// and returns the value. Exists to demonstrate the overflow failure mode;
/// excluded from the accuracy-scan catalog.
NaiveWResult naive_w_exp(double x);

}  // namespace frictionlab
