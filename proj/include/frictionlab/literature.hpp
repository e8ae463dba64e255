#pragma once

// Eleven published explicit Colebrook approximations behind one dispatcher,
// with static metadata (expensive-function counts and the error figure each
// formula is commonly quoted at).
//
// Some sources circulate with transcription defects: inner terms printed
// with a minus where the original adds them, a wrong leading constant, or a
// garbled outer exponent. Every affected formula therefore carries a
// sign-convention toggle: AsPrinted evaluates the defective transcription
// verbatim (useful to measure how badly it misbehaves), Classical evaluates
// the original author's form. The default everywhere is Classical, which is
// the convention that actually reproduces the quoted accuracy figures.

#include "frictionlab/core.hpp"

namespace frictionlab {

enum class SignConvention : std::uint8_t {
    Classical,  ///< the original authors' formula (default)
    AsPrinted,  ///< the circulating defective transcription, verbatim
};

/// Thrown when a formula stage produces a non-evaluable intermediate
/// (log of a non-positive argument); names the offending stage.
struct FormulaStageError {
    MethodId method;
    std::string stage;   ///< e.g. "alpha5: log10 argument <= 0"
    FlowConditions at;
};

/// Static per-formula metadata. log_count / power_count carry the published
/// tally for the formula; quoted_max_error_percent the published worst-case
/// accuracy figure. total_clamond counts every non-integer power twice
/// (power = exp + log under the hood) and adds one for Buzzelli's square
/// root, mirroring the convention of the published comparison.
struct FormulaMetadata {
    MethodId id;
    int log_count = 0;
    int power_count = 0;
    double quoted_max_error_percent = 0.0;
    bool extra_sqrt = false;  ///< Buzzelli carries one square root besides the logs
    int total() const { return log_count + power_count; }
    int total_clamond() const { return log_count + 2 * power_count + (extra_sqrt ? 1 : 0); }
};

/// True for the eleven literature formulas (not the oracle paths or the
/// omega-family methods).
bool is_literature_method(MethodId id);

/// True when the AsPrinted and Classical conventions differ for this method.
bool has_sign_toggle(MethodId id);

/// Dispatch a literature formula by id. Throws FormulaStageError when an
/// intermediate log argument is non-positive (possible for several formulas
/// under AsPrinted), std::invalid_argument for non-literature ids.
FrictionResult friction_by_id(MethodId id, const FlowConditions& cond,
                              SignConvention conv = SignConvention::Classical);

/// Published tally + quoted accuracy for any catalog method (the omega-family
/// methods are included so cost reports can cover the full table).
/// Throws std::invalid_argument for the oracle ids, which have no static tally.
FormulaMetadata formula_metadata(MethodId id);

}  // namespace frictionlab
