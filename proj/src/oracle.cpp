#include "frictionlab/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace frictionlab {

namespace {

constexpr double kLn10 = 2.302585092994045684;

/// Halley refinement of w + ln w = x from a caller-supplied seed.
/// Converges cubically; the stopping test is on the relative step size.
double refine_omega(double w, double x) {
    for (int iter = 0; iter < 64; ++iter) {
        const double g = w + std::log(w) - x;
        const double gp = 1.0 + 1.0 / w;
        const double gpp = -1.0 / (w * w);
        const double step = 2.0 * g * gp / (2.0 * gp * gp - g * gpp);
        w -= step;
        if (std::fabs(step) <= 1e-15 * std::fabs(w)) {
            return w;
        }
    }
    throw std::runtime_error("omega iteration failed to converge");
}

}  // namespace

double compute_x(const FlowConditions& cond) {
    const double R = cond.reynolds;
    const double eps = cond.relative_roughness;
    return std::log(R / 2.51 * (kLn10 / 2.0)) + R * eps / (2.51 * 3.71) * (kLn10 / 2.0);
}

double series_y(double x) {
    const double lx = std::log(x);
    return x - lx + lx / x;
}

double wright_omega(double x) {
    if (!(x >= 1.0)) {
        throw std::invalid_argument("omega evaluator requires x >= 1");
    }
    // The series seed is already within ~8% on the domain of interest and
    // the iteration is cubic, so 2-4 steps reach the stopping threshold.
    const double seed = (x <= 2.0) ? 1.0 : series_y(x);
    return refine_omega(seed, x);
}

FrictionResult friction_reference(const FlowConditions& cond) {
    const double R = cond.reynolds;
    const double eps = cond.relative_roughness;

    double u = 10.0;
    bool converged = false;
    for (int iter = 0; iter < 100; ++iter) {
        const double next = -2.0 * std::log10(2.51 * u / R + eps / 3.71);
        const double delta = std::fabs(next - u);
        u = next;
        if (delta < 1e-13) {
            converged = true;
            break;
        }
    }
    if (!converged) {
        throw std::runtime_error("fixed-point iteration failed to converge");
    }

    // One Newton polish step on g(u) = u + 2*log10(2.51*u/R + eps/3.71).
    const double arg = 2.51 * u / R + eps / 3.71;
    const double g = u + 2.0 * std::log10(arg);
    const double gp = 1.0 + (2.0 / kLn10) * (2.51 / R) / arg;
    u -= g / gp;

    return make_result_from_u(u, MethodId::OracleFixedPoint);
}

FrictionResult friction_exact_lambert(const FlowConditions& cond) {
    const double x = compute_x(cond);
    const double w = wright_omega(x);
    // u = (2/ln10) * (L + w - x) with L = ln(R/2.51 * ln10/2) and w + ln w = x,
    // so w - x = -ln w exactly; the subtraction below loses no digits.
    const double L = std::log(cond.reynolds / 2.51 * (kLn10 / 2.0));
    const double u = (2.0 / kLn10) * (L - std::log(w));
    FrictionResult result = make_result_from_u(u, MethodId::OracleLambert);
    return result;
}

NaiveWResult naive_w_exp(double x) {
    NaiveWResult result;
    const double t = std::exp(x);
    if (std::isinf(t)) {
        result.overflow = true;
        return result;
    }
    // t is representable; solve w*e^w = t through the equivalent stable form
    // w + ln w = ln t. (Forming t first is the point of this demonstration —
    // the overflow above is the failure mode being reproduced.)
    result.value = (x >= 1.0) ? refine_omega(series_y(x), x)
                              : refine_omega(std::fmax(std::log(t), 0.5), x);
    return result;
}

}  // namespace frictionlab
