#pragma once

// Batch evaluation of u = 1/sqrt(f) over arrays of flow conditions.
//
// Two kernel families exist for the branch-free omega-family methods
// (eq3, eq4, eq5, eq6, one-log): a scalar reference kernel that performs
// exactly the same arithmetic as the pointwise functions, and an AVX2+FMA
// kernel processing four lanes per step. Kernel selection happens once per
// call at runtime: the vector kernel is used when the CPU supports AVX2 and
// FMA and the environment variable FRICTIONLAB_SIMD is not set to "scalar".
// The two kernels are equivalence-tested against each other; everything else
// (oracle paths, literature formulas) evaluates through the scalar path.

#include <cstddef>
#include <span>
#include <string_view>

#include "frictionlab/core.hpp"
#include "frictionlab/literature.hpp"
#include "frictionlab/omega_approx.hpp"

namespace frictionlab::batch {

/// Per-call options for methods that take parameters.
struct Options {
    double power_a = 1e6;                                  ///< eq4 exponent parameter
    Eq4Variant variant = Eq4Variant::Eq3Shape;             ///< eq4 structural shape
    SignConvention convention = SignConvention::Classical; ///< literature formulas
};

/// Which kernel implementation a call would dispatch to: "avx2" or "scalar".
/// The answer depends on the method (only the omega-family methods have a
/// vector kernel), on CPU support, and on FRICTIONLAB_SIMD.
std::string_view kernel_name(MethodId id);

/// True when the AVX2+FMA kernels are compiled in and the CPU supports them
/// (ignores the environment override).
bool avx2_supported();

/// Computes u for every (reynolds[i], roughness[i]) pair. Faulting points
/// (non-finite or non-positive u, possible for AsPrinted literature forms)
/// are stored as quiet NaN rather than thrown. All spans must be equally
/// sized. Oracle ids are valid here and evaluate their scalar definitions.
void eval_u(MethodId id, std::span<const double> reynolds,
            std::span<const double> roughness, std::span<double> u_out,
            const Options& opts = {});

/// Scalar-only variant of eval_u, bypassing dispatch (used by the
/// equivalence tests and as the fallback lane).
void eval_u_scalar(MethodId id, std::span<const double> reynolds,
                   std::span<const double> roughness, std::span<double> u_out,
                   const Options& opts = {});

#if defined(FRICTIONLAB_HAVE_AVX2)
/// AVX2 lane, compiled only when the toolchain supports -mavx2 -mfma.
/// Defined for the omega-family methods; other ids fall through to scalar.
void eval_u_avx2(MethodId id, std::span<const double> reynolds,
                 std::span<const double> roughness, std::span<double> u_out,
                 const Options& opts = {});
#endif

/// Single-point convenience used by the CLI and tests: evaluates any catalog
/// method (including the oracle paths) at one condition. Faults surface as
/// FormulaStageError, matching the pointwise dispatchers.
FrictionResult eval_one(MethodId id, const FlowConditions& cond,
                        const Options& opts = {});

}  // namespace frictionlab::batch
