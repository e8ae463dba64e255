#pragma once

// The explicit approximation family built on the transformed variables
//   A = R*eps/8.0878,   B = ln(R) - 0.779397488:
// a base two-log form (eq3), two regression-refined two-log forms (eq5, eq6),
// and a power-form variant (eq4) that replaces each ln(z) by a*z^(1/a) - a.

#include "frictionlab/core.hpp"

namespace frictionlab {

/// The pair (A, B) from which the whole family is built.
struct ABPair {
    double A = 0.0;  ///< R*eps/8.0878; zero exactly at the smooth-pipe limit
    double B = 0.0;  ///< ln(R) - 0.779397488 (subtraction form: one log, no divide)
};

/// Structural variant selector for friction_eq4: which of the three family
/// shapes hosts the power-form log replacement.
enum class Eq4Variant : std::uint8_t {
    Eq3Shape,  ///< default
    Eq5Shape,
    Eq6Shape,
};

ABPair compute_ab(const FlowConditions& cond);

/// u = 0.8686 * [ B + ln(B+A) * (1/(B+A) - 1) ]
FrictionResult friction_eq3(const FlowConditions& cond);

/// Power form: every ln(z) above replaced by a*z^(1/a) - a, with
/// B = a*R^(1/a) - a - 0.779397488. Requires a >= 1e5 (default 1e6);
/// throws std::invalid_argument below that (the replacement degrades fast).
FrictionResult friction_eq4(const FlowConditions& cond, double a = 1e6,
                            Eq4Variant variant = Eq4Variant::Eq3Shape);

/// u = 0.8686 * [ B + 1.038*ln(B+A)/(0.332 + B+A) - ln(B+A) ]
FrictionResult friction_eq5(const FlowConditions& cond);

/// u = 0.8686 * [ B + 1.0119*ln(B+A)/(B+A) - ln(B+A) + (ln(B+A) - 2.3849)/(B+A)^2 ]
FrictionResult friction_eq6(const FlowConditions& cond);

}  // namespace frictionlab
