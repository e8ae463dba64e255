#pragma once

// Core domain types shared by every other module: flow-condition inputs,
// validation of the turbulent-flow domain, the friction-factor result type,
// the closed method catalog, and the relative-error metric.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace frictionlab {

/// Dimensionless input pair for a pipe-flow friction query.
struct FlowConditions {
    double reynolds = 0.0;            ///< Reynolds number R, must be finite and > 0.
    double relative_roughness = 0.0;  ///< Roughness height / diameter, finite and >= 0.
};

/// One named bound violation discovered by validate_domain().
struct BoundViolation {
    std::string bound;  ///< e.g. "reynolds_lower", "roughness_upper"
    double value = 0.0;
    double limit = 0.0;
};

/// Result of checking a FlowConditions against the validated turbulent band
/// 4000 < R < 1e8, 0 <= eps < 0.05 (eps == 0 admitted as the smooth-pipe limit).
struct DomainStatus {
    bool inside_colebrook_domain = false;
    std::vector<BoundViolation> violations;
};

/// Closed catalog of friction-factor computations.
enum class MethodId : std::uint8_t {
    OracleFixedPoint,       ///< iterative reference solution of the implicit equation
    OracleLambert,          ///< exact explicit form via the omega function
    Eq3,                    ///< base two-log explicit approximation
    Eq4,                    ///< power-form variant (logs replaced by a*z^(1/a) - a)
    Eq5,                    ///< regression-refined two-log approximation
    Eq6,                    ///< most accurate two-log approximation of the family
    Eq3OneLog,              ///< Eq3 structure with the rational (log-free) B, one log total
    Buzzelli,
    ZigrangSylvester,
    Serghides,
    SerghidesSimple,
    Romeo,
    VatankhahKouchakzadeh,
    Barr,
    Chen,
    Fang,
    Papaevangelou,
    Vatankhah,
};

inline constexpr MethodId kAllMethods[] = {
    MethodId::OracleFixedPoint, MethodId::OracleLambert,
    MethodId::Eq3, MethodId::Eq4, MethodId::Eq5, MethodId::Eq6, MethodId::Eq3OneLog,
    MethodId::Buzzelli, MethodId::ZigrangSylvester, MethodId::Serghides,
    MethodId::SerghidesSimple, MethodId::Romeo, MethodId::VatankhahKouchakzadeh,
    MethodId::Barr, MethodId::Chen, MethodId::Fang, MethodId::Papaevangelou,
    MethodId::Vatankhah,
};

/// Catalog methods scored against the oracle (everything except the two oracle paths).
inline constexpr MethodId kScanMethods[] = {
    MethodId::Eq3, MethodId::Eq4, MethodId::Eq5, MethodId::Eq6, MethodId::Eq3OneLog,
    MethodId::Buzzelli, MethodId::ZigrangSylvester, MethodId::Serghides,
    MethodId::SerghidesSimple, MethodId::Romeo, MethodId::VatankhahKouchakzadeh,
    MethodId::Barr, MethodId::Chen, MethodId::Fang, MethodId::Papaevangelou,
    MethodId::Vatankhah,
};

/// Stable CLI token for a method ("eq3", "serghides-simple", "oracle", ...).
std::string_view method_name(MethodId id);

/// Inverse of method_name; returns true and sets `out` when the token is known.
bool method_from_name(std::string_view name, MethodId& out);

/// One-line human description used by --help and reports.
std::string_view method_description(MethodId id);

/// Friction factor plus the primary computed quantity u = 1/sqrt(f).
struct FrictionResult {
    double friction_factor = 0.0;  ///< f = u^-2
    double inverse_sqrt = 0.0;     ///< u, the quantity the formulas actually produce
    MethodId method = MethodId::OracleFixedPoint;
};

/// Builds a FrictionResult from the computed u = 1/sqrt(f).
FrictionResult make_result_from_u(double u, MethodId method);

/// Validates the turbulent-band domain. Throws std::invalid_argument for
/// non-finite or non-positive Reynolds, or non-finite/negative roughness;
/// out-of-band but finite inputs yield inside=false with named violations.
DomainStatus validate_domain(const FlowConditions& cond);

/// Residual of the implicit friction relation at a candidate f:
///   1/sqrt(f) + 2*log10(2.51/(R*sqrt(f)) + eps/3.71)
/// Zero exactly at the reference solution; strictly decreasing in f.
double colebrook_residual(double friction_factor, const FlowConditions& cond);

/// 100 * |q_approx - q_ref| / |q_ref|. Throws std::invalid_argument when q_ref == 0.
double relative_error_percent(double q_approx, double q_ref);

}  // namespace frictionlab
