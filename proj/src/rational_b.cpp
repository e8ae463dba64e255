#include "frictionlab/rational_b.hpp"

#include <cmath>
#include <stdexcept>

namespace frictionlab {

namespace {

void require_fit_interval(double reynolds) {
    if (!(reynolds >= 4000.0 && reynolds <= 1e8)) {
        throw std::domain_error("rational B replacement is valid only for R in [4000, 1e8]");
    }
}

}  // namespace

double compute_r(double reynolds) {
    if (!(reynolds > 0.0)) {
        throw std::invalid_argument("reynolds must be positive");
    }
    return reynolds / kReynoldsScale;
}

double pade_s(double r) {
    if (!(r > 0.0)) {
        throw std::invalid_argument("pade_s requires r > 0");
    }
    const double num = r * (r * (11.0 * r + 27.0) - 27.0) - 11.0;
    const double den = r * (r * (3.0 * r + 27.0) + 27.0) + 3.0;
    return num / den;
}

double compute_b_rational(double reynolds) {
    require_fit_interval(reynolds);
    const double r = compute_r(reynolds);
    const double s = pade_s(r);
    const double s3 = s * s * s;
    const double s7 = s3 * s3 * s;
    return 0.98236 * s + s7 / 9200.67 + r / 150.2325 - r * r / 138187.1651 -
           1.0 / (161.124 * r) + 11.881;
}

double compute_b_horner(double reynolds) {
    require_fit_interval(reynolds);
    const double r = compute_r(reynolds);
    const double s = pade_s(r);
    const double s2 = s * s;
    const double s6 = s2 * s2 * s2;
    return s * (0.0001086 * s6 + 0.9824) - 0.006206 / r -
           r * (0.000007237 * r - 0.006656) + 11.881;
}

FrictionResult friction_onelog(const FlowConditions& cond) {
    const double A = cond.reynolds * cond.relative_roughness / 8.0878;
    const double B = compute_b_horner(cond.reynolds);
    const double z = B + A;
    const double L = std::log(z);
    const double u = 0.8686 * (B + L * (1.0 / z - 1.0));
    return make_result_from_u(u, MethodId::Eq3OneLog);
}

}  // namespace frictionlab
