#include "frictionlab/omega_approx.hpp"

#include <cmath>
#include <stdexcept>

namespace frictionlab {

ABPair compute_ab(const FlowConditions& cond) {
    ABPair ab;
    ab.A = cond.reynolds * cond.relative_roughness / 8.0878;
    ab.B = std::log(cond.reynolds) - 0.779397488;
    return ab;
}

FrictionResult friction_eq3(const FlowConditions& cond) {
    const auto [A, B] = compute_ab(cond);
    const double z = B + A;
    const double L = std::log(z);
    const double u = 0.8686 * (B + L * (1.0 / z - 1.0));
    return make_result_from_u(u, MethodId::Eq3);
}

FrictionResult friction_eq5(const FlowConditions& cond) {
    const auto [A, B] = compute_ab(cond);
    const double z = B + A;
    const double L = std::log(z);
    const double u = 0.8686 * (B + 1.038 * L / (0.332 + z) - L);
    return make_result_from_u(u, MethodId::Eq5);
}

FrictionResult friction_eq6(const FlowConditions& cond) {
    const auto [A, B] = compute_ab(cond);
    const double z = B + A;
    const double L = std::log(z);
    const double u = 0.8686 * (B + 1.0119 * L / z - L + (L - 2.3849) / (z * z));
    return make_result_from_u(u, MethodId::Eq6);
}

FrictionResult friction_eq4(const FlowConditions& cond, double a, Eq4Variant variant) {
    if (!(a >= 1e5)) {
        throw std::invalid_argument("eq4 requires a >= 1e5");
    }
    const double inv_a = 1.0 / a;
    const double A = cond.reynolds * cond.relative_roughness / 8.0878;
    const double B = a * std::pow(cond.reynolds, inv_a) - a - 0.779397488;
    const double z = B + A;
    const double L = a * std::pow(z, inv_a) - a;  // stands in for ln(z)

    double u = 0.0;
    switch (variant) {
        case Eq4Variant::Eq3Shape:
            u = 0.8686 * (B + L * (1.0 / z - 1.0));
            break;
        case Eq4Variant::Eq5Shape:
            u = 0.8686 * (B + 1.038 * L / (0.332 + z) - L);
            break;
        case Eq4Variant::Eq6Shape:
            u = 0.8686 * (B + 1.0119 * L / z - L + (L - 2.3849) / (z * z));
            break;
    }
    return make_result_from_u(u, MethodId::Eq4);
}

}  // namespace frictionlab
