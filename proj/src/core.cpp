#include "frictionlab/core.hpp"

#include <cmath>
#include <stdexcept>

namespace frictionlab {

namespace {

struct MethodInfo {
    MethodId id;
    std::string_view name;
    std::string_view description;
};

constexpr MethodInfo kMethodInfo[] = {
    {MethodId::OracleFixedPoint, "oracle",
     "iterative reference solution of the implicit friction relation"},
    {MethodId::OracleLambert, "lambert-oracle",
     "exact explicit reference via the omega function (overflow-safe)"},
    {MethodId::Eq3, "eq3", "base two-log explicit approximation (A/B form)"},
    {MethodId::Eq4, "eq4", "power-form variant of eq3/eq5/eq6 (logs via a*z^(1/a) - a)"},
    {MethodId::Eq5, "eq5", "regression-refined two-log approximation"},
    {MethodId::Eq6, "eq6", "most accurate two-log approximation of the family"},
    {MethodId::Eq3OneLog, "eq11", "eq3 with the rational log-free B: one log in total"},
    {MethodId::Buzzelli, "buzzelli", "Buzzelli two-stage approximation"},
    {MethodId::ZigrangSylvester, "zigrang-sylvester", "Zigrang-Sylvester three-log approximation"},
    {MethodId::Serghides, "serghides", "Serghides three-stage Steffensen-style approximation"},
    {MethodId::SerghidesSimple, "serghides-simple", "Serghides simplified two-stage variant"},
    {MethodId::Romeo, "romeo", "Romeo-Royo-Monzon nested-log approximation"},
    {MethodId::VatankhahKouchakzadeh, "vatankhah-kouchakzadeh",
     "Vatankhah-Kouchakzadeh corrected omega-style approximation"},
    {MethodId::Barr, "barr", "Barr single-expression approximation"},
    {MethodId::Chen, "chen", "Chen two-log approximation"},
    {MethodId::Fang, "fang", "Fang power-fit approximation"},
    {MethodId::Papaevangelou, "papaevangelou", "Papaevangelou quartic-corrected approximation"},
    {MethodId::Vatankhah, "vatankhah", "Vatankhah refined omega-style approximation"},
};

}  // namespace

std::string_view method_name(MethodId id) {
    for (const auto& info : kMethodInfo) {
        if (info.id == id) return info.name;
    }
    throw std::invalid_argument("unknown method id");
}

std::string_view method_description(MethodId id) {
    for (const auto& info : kMethodInfo) {
        if (info.id == id) return info.description;
    }
    throw std::invalid_argument("unknown method id");
}

bool method_from_name(std::string_view name, MethodId& out) {
    for (const auto& info : kMethodInfo) {
        if (info.name == name) {
            out = info.id;
            return true;
        }
    }
    return false;
}

FrictionResult make_result_from_u(double u, MethodId method) {
    FrictionResult result;
    result.inverse_sqrt = u;
    result.friction_factor = 1.0 / (u * u);
    result.method = method;
    return result;
}

DomainStatus validate_domain(const FlowConditions& cond) {
    if (!std::isfinite(cond.reynolds) || cond.reynolds <= 0.0) {
        throw std::invalid_argument("reynolds must be finite and strictly positive");
    }
    if (!std::isfinite(cond.relative_roughness) || cond.relative_roughness < 0.0) {
        throw std::invalid_argument("relative roughness must be finite and non-negative");
    }

    DomainStatus status;
    if (cond.reynolds <= 4000.0) {
        status.violations.push_back({"reynolds_lower", cond.reynolds, 4000.0});
    }
    if (cond.reynolds >= 1e8) {
        status.violations.push_back({"reynolds_upper", cond.reynolds, 1e8});
    }
    if (cond.relative_roughness >= 0.05) {
        status.violations.push_back({"roughness_upper", cond.relative_roughness, 0.05});
    }
    status.inside_colebrook_domain = status.violations.empty();
    return status;
}

double colebrook_residual(double friction_factor, const FlowConditions& cond) {
    if (!(friction_factor > 0.0)) {
        throw std::invalid_argument("friction factor must be positive");
    }
    const double u = 1.0 / std::sqrt(friction_factor);
    const double arg = 2.51 * u / cond.reynolds + cond.relative_roughness / 3.71;
    if (!(arg > 0.0)) {
        throw std::runtime_error("log10 argument non-positive in residual");
    }
    return u + 2.0 * std::log10(arg);
}

double relative_error_percent(double q_approx, double q_ref) {
    if (q_ref == 0.0) {
        throw std::invalid_argument("reference value must be nonzero");
    }
    return 100.0 * std::fabs(q_approx - q_ref) / std::fabs(q_ref);
}

}  // namespace frictionlab
