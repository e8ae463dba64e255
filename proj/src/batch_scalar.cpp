#include <cmath>
#include <limits>
#include <stdexcept>

#include "frictionlab/batch.hpp"
#include "frictionlab/oracle.hpp"
#include "frictionlab/rational_b.hpp"

namespace frictionlab::batch {

namespace {

FrictionResult point_result(MethodId id, const FlowConditions& cond, const Options& opts) {
    switch (id) {
        case MethodId::OracleFixedPoint: return friction_reference(cond);
        case MethodId::OracleLambert:    return friction_exact_lambert(cond);
        case MethodId::Eq3:              return friction_eq3(cond);
        case MethodId::Eq4:              return friction_eq4(cond, opts.power_a, opts.variant);
        case MethodId::Eq5:              return friction_eq5(cond);
        case MethodId::Eq6:              return friction_eq6(cond);
        case MethodId::Eq3OneLog:        return friction_onelog(cond);
        default:                         return friction_by_id(id, cond, opts.convention);
    }
}

void require_matching_extents(std::span<const double> reynolds,
                              std::span<const double> roughness,
                              std::span<double> u_out) {
    if (reynolds.size() != roughness.size() || reynolds.size() != u_out.size()) {
        throw std::invalid_argument("batch spans must have equal size");
    }
}

}  // namespace

FrictionResult eval_one(MethodId id, const FlowConditions& cond, const Options& opts) {
    return point_result(id, cond, opts);
}

void eval_u_scalar(MethodId id, std::span<const double> reynolds,
                   std::span<const double> roughness, std::span<double> u_out,
                   const Options& opts) {
    require_matching_extents(reynolds, roughness, u_out);
    constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t i = 0; i < reynolds.size(); ++i) {
        try {
            u_out[i] = point_result(id, {reynolds[i], roughness[i]}, opts).inverse_sqrt;
        } catch (const FormulaStageError&) {
            u_out[i] = kNaN;  // data-dependent fault; parameter errors still propagate
        }
    }
}

}  // namespace frictionlab::batch
