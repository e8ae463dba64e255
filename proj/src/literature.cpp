#include "frictionlab/literature.hpp"

#include <cmath>
#include <stdexcept>

namespace frictionlab {

namespace {

/// Guarded log10: throws a stage-named error on a non-positive argument.
double log10_stage(double arg, MethodId id, const char* stage, const FlowConditions& cond) {
    if (!(arg > 0.0)) {
        throw FormulaStageError{id, std::string(stage) + ": log10 argument <= 0", cond};
    }
    return std::log10(arg);
}

double ln_stage(double arg, MethodId id, const char* stage, const FlowConditions& cond) {
    if (!(arg > 0.0)) {
        throw FormulaStageError{id, std::string(stage) + ": ln argument <= 0", cond};
    }
    return std::log(arg);
}

/// Final guard shared by all formulas: a friction expression that produced a
/// non-finite or non-positive u has left its meaningful range.
double check_u(double u, MethodId id, const FlowConditions& cond) {
    if (!std::isfinite(u) || u <= 0.0) {
        throw FormulaStageError{id, "result: non-positive or non-finite u", cond};
    }
    return u;
}

double buzzelli_u(const FlowConditions& c, SignConvention) {
    const double R = c.reynolds;
    const double eps = c.relative_roughness;
    const double a1 =
        (0.774 * std::log(R) - 1.41) / (1.0 + 1.32 * std::sqrt(eps));
    const double a2 = eps / 3.7 * R + 2.51 * a1;
    const double lg = log10_stage(a2 / R, MethodId::Buzzelli, "alpha2/R", c);
    return a1 - (a1 + 2.0 * lg) / (1.0 + 2.18 / a2);
}

double zigrang_sylvester_u(const FlowConditions& c, SignConvention conv) {
    const double R = c.reynolds;
    const double t = c.relative_roughness / 3.7;
    const double inner = (conv == SignConvention::AsPrinted) ? t - 13.0 / R : t + 13.0 / R;
    const double a4 = log10_stage(inner, MethodId::ZigrangSylvester, "alpha4", c);
    const double a3 =
        log10_stage(t - 5.02 / R * a4, MethodId::ZigrangSylvester, "alpha3", c);
    return -2.0 * log10_stage(t - 5.02 / R * a3, MethodId::ZigrangSylvester, "result", c);
}

double serghides_u(const FlowConditions& c, SignConvention conv) {
    const double R = c.reynolds;
    const double t = c.relative_roughness / 3.7;
    const double s = (conv == SignConvention::AsPrinted) ? -1.0 : 1.0;
    const double a5 =
        -2.0 * log10_stage(t + s * (12.0 / R), MethodId::Serghides, "alpha5", c);
    const double a6 =
        -2.0 * log10_stage(t + s * (2.51 / R) * a5, MethodId::Serghides, "alpha6", c);
    const double a7 =
        -2.0 * log10_stage(t + s * (2.51 / R) * a6, MethodId::Serghides, "alpha7", c);
    const double d = a6 - a5;
    return a5 - d * d / (a7 - 2.0 * a6 + a5);
}

double serghides_simple_u(const FlowConditions& c, SignConvention conv) {
    const double R = c.reynolds;
    const double t = c.relative_roughness / 3.7;
    const double s = (conv == SignConvention::AsPrinted) ? -1.0 : 1.0;
    const double a13 =
        -2.0 * log10_stage(t + s * (12.0 / R), MethodId::SerghidesSimple, "alpha13", c);
    const double a14 =
        -2.0 * log10_stage(t + s * (2.51 / R) * a13, MethodId::SerghidesSimple, "alpha14", c);
    const double d = a13 - 4.781;
    return 4.781 - d * d / (a14 - 2.0 * a13 + 4.781);
}

double romeo_u(const FlowConditions& c, SignConvention) {
    const double R = c.reynolds;
    const double eps = c.relative_roughness;
    const double a9 = log10_stage(std::pow(eps / 7.7918, 0.9924) +
                                      std::pow(5.3326 / (208.815 + R), 0.9345),
                                  MethodId::Romeo, "alpha9", c);
    const double a8 =
        log10_stage(eps / 3.827 - 4.567 / R * a9, MethodId::Romeo, "alpha8", c);
    return -2.0 * log10_stage(eps / 3.7065 - 5.0272 / R * a8, MethodId::Romeo, "result", c);
}

double vatankhah_kouchakzadeh_u(const FlowConditions& c, SignConvention conv) {
    const double R = c.reynolds;
    const double eps = c.relative_roughness;
    const double scaled = 0.4587 * R;
    const double lead_arg =
        (conv == SignConvention::AsPrinted) ? 0.1587 * R : scaled;
    const double a10 =
        0.124 * R * eps + ln_stage(lead_arg, MethodId::VatankhahKouchakzadeh, "alpha10", c);
    const double a11 = a10 / (a10 + 0.9633);
    const double base = a10 - 0.31;
    if (!(base > 0.0)) {
        throw FormulaStageError{MethodId::VatankhahKouchakzadeh,
                                "result: power base <= 0", c};
    }
    return 0.8686 * ln_stage(scaled / std::pow(base, a11),
                             MethodId::VatankhahKouchakzadeh, "result", c);
}

double barr_u(const FlowConditions& c, SignConvention) {
    const double R = c.reynolds;
    const double eps = c.relative_roughness;
    const double a12 = R * (1.0 + std::pow(R, 0.52) / 29.0 * std::pow(eps, 0.7));
    const double inner = log10_stage(R / 7.0, MethodId::Barr, "log(R/7)", c);
    return -2.0 *
           log10_stage(eps / 3.7 + 4.518 * inner / a12, MethodId::Barr, "result", c);
}

double chen_u(const FlowConditions& c, SignConvention) {
    const double R = c.reynolds;
    const double eps = c.relative_roughness;
    const double a15 = log10_stage(
        std::pow(eps, 1.1098) / 2.8257 + 5.8506 / std::pow(R, 0.8981),
        MethodId::Chen, "alpha15", c);
    return -2.0 *
           log10_stage(eps / 3.7065 - 5.0452 / R * a15, MethodId::Chen, "result", c);
}

double fang_u(const FlowConditions& c, SignConvention conv) {
    const double R = c.reynolds;
    const double eps = c.relative_roughness;
    const double p1 = 60.525 / std::pow(R, 1.1105);
    const double p2 = 56.291 / std::pow(R, 1.0712);
    if (conv == SignConvention::AsPrinted) {
        // Both correction terms subtracted, and the outer exponent -2
        // applied to the friction expression itself.
        const double L =
            ln_stage(0.234 * std::pow(eps, 1.1007) - (p1 + p2), MethodId::Fang, "ln", c);
        const double inv2 = 1.0 / (L * L);
        const double v = 1.613 * inv2;
        return 1.0 / (v * v);
    }
    const double L =
        ln_stage(0.234 * std::pow(eps, 1.1007) - p1 + p2, MethodId::Fang, "ln", c);
    const double f = 1.613 / (L * L);
    return 1.0 / std::sqrt(f);
}

double papaevangelou_u(const FlowConditions& c, SignConvention conv) {
    const double R = c.reynolds;
    const double eps = c.relative_roughness;
    const double t7 = 7.0 - std::log10(R);
    const double t72 = t7 * t7;
    const double num = 0.2479 - 0.0000947 * (t72 * t72);
    const double den = log10_stage(eps / 3.615 + 7.366 / std::pow(R, 0.9142),
                                   MethodId::Papaevangelou, "denominator", c);
    const double f = num / (den * den);
    if (conv == SignConvention::AsPrinted) {
        return 1.0 / (f * f);  // the circulating text squares instead of rooting
    }
    if (!(f > 0.0)) {
        throw FormulaStageError{MethodId::Papaevangelou, "result: f <= 0", c};
    }
    return 1.0 / std::sqrt(f);
}

double vatankhah_u(const FlowConditions& c, SignConvention conv) {
    const double R = c.reynolds;
    const double eps = c.relative_roughness;
    const double scaled = 0.3984 * R;
    const double a17 =
        0.12363 * R * eps + ln_stage(scaled, MethodId::Vatankhah, "alpha17", c);
    const double q = 0.8686 * a17;
    const double tl = ln_stage(q, MethodId::Vatankhah, "ln(0.8686*alpha17)", c);
    const double p = 1.0 + a17;
    const double a18 = 1.0 + 1.0 / (p / (0.5 * tl) - (1.0 + 4.0 * a17) / (3.0 * p));
    const double expo =
        (conv == SignConvention::AsPrinted) ? a17 + a18 : a17 / (a17 + a18);
    return 0.8686 * ln_stage(scaled / std::pow(q, expo), MethodId::Vatankhah, "result", c);
}

}  // namespace

bool is_literature_method(MethodId id) {
    switch (id) {
        case MethodId::Buzzelli:
        case MethodId::ZigrangSylvester:
        case MethodId::Serghides:
        case MethodId::SerghidesSimple:
        case MethodId::Romeo:
        case MethodId::VatankhahKouchakzadeh:
        case MethodId::Barr:
        case MethodId::Chen:
        case MethodId::Fang:
        case MethodId::Papaevangelou:
        case MethodId::Vatankhah:
            return true;
        default:
            return false;
    }
}

bool has_sign_toggle(MethodId id) {
    switch (id) {
        case MethodId::ZigrangSylvester:
        case MethodId::Serghides:
        case MethodId::SerghidesSimple:
        case MethodId::VatankhahKouchakzadeh:
        case MethodId::Fang:
        case MethodId::Papaevangelou:
        case MethodId::Vatankhah:
            return true;
        default:
            return false;
    }
}

FrictionResult friction_by_id(MethodId id, const FlowConditions& cond, SignConvention conv) {
    double u = 0.0;
    switch (id) {
        case MethodId::Buzzelli:              u = buzzelli_u(cond, conv); break;
        case MethodId::ZigrangSylvester:      u = zigrang_sylvester_u(cond, conv); break;
        case MethodId::Serghides:             u = serghides_u(cond, conv); break;
        case MethodId::SerghidesSimple:       u = serghides_simple_u(cond, conv); break;
        case MethodId::Romeo:                 u = romeo_u(cond, conv); break;
        case MethodId::VatankhahKouchakzadeh: u = vatankhah_kouchakzadeh_u(cond, conv); break;
        case MethodId::Barr:                  u = barr_u(cond, conv); break;
        case MethodId::Chen:                  u = chen_u(cond, conv); break;
        case MethodId::Fang:                  u = fang_u(cond, conv); break;
        case MethodId::Papaevangelou:         u = papaevangelou_u(cond, conv); break;
        case MethodId::Vatankhah:             u = vatankhah_u(cond, conv); break;
        default:
            throw std::invalid_argument("not a literature method");
    }
    return make_result_from_u(check_u(u, id, cond), id);
}

FormulaMetadata formula_metadata(MethodId id) {
    switch (id) {
        // Omega-family methods, included so cost reports cover the full table.
        case MethodId::Eq3:        return {id, 2, 0, 0.13, false};
        case MethodId::Eq4:        return {id, 0, 2, 0.13, false};
        case MethodId::Eq5:        return {id, 2, 0, 0.045, false};
        case MethodId::Eq6:        return {id, 2, 0, 0.0096, false};
        case MethodId::Eq3OneLog:  return {id, 1, 0, 0.40, false};
        // Literature formulas with their published tallies and error figures.
        case MethodId::Vatankhah:             return {id, 1, 2, 0.0028, false};
        case MethodId::Buzzelli:              return {id, 2, 0, 0.14, true};
        case MethodId::ZigrangSylvester:      return {id, 3, 0, 0.14, false};
        case MethodId::Serghides:             return {id, 3, 0, 0.14, false};
        case MethodId::Romeo:                 return {id, 3, 2, 0.14, false};
        case MethodId::VatankhahKouchakzadeh: return {id, 2, 1, 0.15, false};
        case MethodId::Barr:                  return {id, 2, 2, 0.27, false};
        case MethodId::SerghidesSimple:       return {id, 2, 0, 0.35, false};
        case MethodId::Chen:                  return {id, 2, 2, 0.36, false};
        case MethodId::Fang:                  return {id, 1, 3, 0.62, false};
        case MethodId::Papaevangelou:         return {id, 2, 1, 0.82, false};
        default:
            throw std::invalid_argument("no static tally for iterative reference methods");
    }
}

}  // namespace frictionlab
