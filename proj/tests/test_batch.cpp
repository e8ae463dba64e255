#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "frictionlab/batch.hpp"
#include "frictionlab/omega_approx.hpp"
#include "frictionlab/oracle.hpp"

using namespace frictionlab;

namespace {

struct Inputs {
    std::vector<double> reynolds;
    std::vector<double> roughness;
};

// Flattened log-spaced grid plus a ragged tail so the vector kernel's
// four-lane main loop and its scalar remainder both get exercised.
Inputs make_inputs(std::size_t target) {
    Inputs in;
    in.reynolds.reserve(target);
    in.roughness.reserve(target);
    std::size_t produced = 0;
    for (std::size_t i = 0; produced < target; ++i) {
        const double reynolds =
            4100.0 * std::pow(1e8 / 4100.0 / 1.02, (i % 131) / 130.0);
        const double eps =
            (i % 7 == 0) ? 0.0
                         : 1e-7 * std::pow(0.049 / 1e-7, ((i * 37) % 113) / 112.0);
        in.reynolds.push_back(reynolds);
        in.roughness.push_back(eps);
        ++produced;
    }
    return in;
}

double max_rel_diff(const std::vector<double>& a, const std::vector<double>& b) {
    REQUIRE(a.size() == b.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::isnan(a[i]) && std::isnan(b[i])) continue;
        REQUIRE(std::isfinite(a[i]));
        REQUIRE(std::isfinite(b[i]));
        worst = std::max(worst, std::fabs(a[i] - b[i]) / std::fabs(b[i]));
    }
    return worst;
}

}  // namespace

TEST_CASE("scalar batch equals the pointwise functions bit for bit") {
    const Inputs in = make_inputs(257);
    std::vector<double> u(in.reynolds.size());
    batch::eval_u_scalar(MethodId::Eq6, in.reynolds, in.roughness, u);
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double expected =
            friction_eq6({in.reynolds[i], in.roughness[i]}).inverse_sqrt;
        CHECK(u[i] == expected);
    }
}

TEST_CASE("scalar batch stores staged faults as quiet NaN") {
    // The misprinted serghides variant faults over most of the domain; the
    // batch path must absorb that into NaN instead of throwing.
    const Inputs in = make_inputs(64);
    std::vector<double> u(in.reynolds.size());
    batch::Options opts;
    opts.convention = SignConvention::AsPrinted;
    batch::eval_u_scalar(MethodId::Serghides, in.reynolds, in.roughness, u,
                         opts);
    std::size_t nan_count = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        bool threw = false;
        try {
            const double expected =
                friction_by_id(MethodId::Serghides,
                               {in.reynolds[i], in.roughness[i]},
                               SignConvention::AsPrinted)
                    .inverse_sqrt;
            CHECK(u[i] == expected);
        } catch (const FormulaStageError&) {
            threw = true;
        }
        if (threw) {
            CHECK(std::isnan(u[i]));
            ++nan_count;
        }
    }
    CHECK(nan_count > 0);
}

TEST_CASE("vector and scalar kernels agree") {
    if (!batch::avx2_supported()) {
        WARN("AVX2 kernels unavailable on this host; equivalence not exercised");
        return;
    }
    // 1003 = 250 full four-lane blocks + 3-point tail.
    const Inputs in = make_inputs(1003);
    std::vector<double> u_vec(in.reynolds.size());
    std::vector<double> u_sca(in.reynolds.size());

    SUBCASE("two-log family") {
        for (MethodId id : {MethodId::Eq3, MethodId::Eq5, MethodId::Eq6}) {
            CAPTURE(method_name(id));
            batch::eval_u(id, in.reynolds, in.roughness, u_vec);
            batch::eval_u_scalar(id, in.reynolds, in.roughness, u_sca);
            CHECK(max_rel_diff(u_vec, u_sca) < 1e-13);
        }
    }

    SUBCASE("one-log method") {
        batch::eval_u(MethodId::Eq3OneLog, in.reynolds, in.roughness, u_vec);
        batch::eval_u_scalar(MethodId::Eq3OneLog, in.reynolds, in.roughness, u_sca);
        CHECK(max_rel_diff(u_vec, u_sca) < 1e-13);
    }

    SUBCASE("power-form variants") {
        // The vector lane computes a*(v^(1/a)-1) through a cancellation-free
        // series; the scalar lane forms a*pow(v, 1/a) - a, whose rounding
        // error grows linearly with a (it cancels ~log10(a) digits). The
        // agreement bound scales accordingly.
        for (Eq4Variant variant :
             {Eq4Variant::Eq3Shape, Eq4Variant::Eq5Shape, Eq4Variant::Eq6Shape}) {
            batch::Options opts;
            opts.variant = variant;
            for (double a : {1e5, 1e6, 1e8}) {
                opts.power_a = a;
                CAPTURE(static_cast<int>(variant));
                CAPTURE(a);
                batch::eval_u(MethodId::Eq4, in.reynolds, in.roughness, u_vec, opts);
                batch::eval_u_scalar(MethodId::Eq4, in.reynolds, in.roughness,
                                     u_sca, opts);
                CHECK(max_rel_diff(u_vec, u_sca) < std::max(1e-10, a * 1e-15));
            }
        }
    }
}

TEST_CASE("kernel selection honours method and environment") {
    // Literature formulas never have a vector kernel.
    CHECK(batch::kernel_name(MethodId::Serghides) == "scalar");
    CHECK(batch::kernel_name(MethodId::OracleFixedPoint) == "scalar");

    // Run the toggle sequence from a known state, restoring nothing: the
    // suite owns this variable for the remainder of the process.
    unsetenv("FRICTIONLAB_SIMD");

    if (batch::avx2_supported()) {
        CHECK(batch::kernel_name(MethodId::Eq6) == "avx2");
        setenv("FRICTIONLAB_SIMD", "scalar", 1);
        CHECK(batch::kernel_name(MethodId::Eq6) == "scalar");
        unsetenv("FRICTIONLAB_SIMD");
        CHECK(batch::kernel_name(MethodId::Eq6) == "avx2");
    } else {
        CHECK(batch::kernel_name(MethodId::Eq6) == "scalar");
    }
}

TEST_CASE("forced-scalar batch output matches the dispatched output") {
    if (!batch::avx2_supported()) return;
    const Inputs in = make_inputs(515);
    std::vector<double> u_auto(in.reynolds.size());
    std::vector<double> u_forced(in.reynolds.size());
    batch::eval_u(MethodId::Eq3, in.reynolds, in.roughness, u_auto);
    setenv("FRICTIONLAB_SIMD", "scalar", 1);
    batch::eval_u(MethodId::Eq3, in.reynolds, in.roughness, u_forced);
    unsetenv("FRICTIONLAB_SIMD");
    CHECK(max_rel_diff(u_auto, u_forced) < 1e-13);
}

TEST_CASE("single-point convenience matches the pointwise dispatch") {
    const FlowConditions cond{2.3e5, 3.7e-4};
    const FrictionResult via_batch = batch::eval_one(MethodId::Eq6, cond);
    const FrictionResult direct = friction_eq6(cond);
    CHECK(via_batch.inverse_sqrt == direct.inverse_sqrt);
    CHECK(via_batch.friction_factor == direct.friction_factor);
    CHECK(via_batch.method == MethodId::Eq6);

    const FrictionResult oracle = batch::eval_one(MethodId::OracleFixedPoint, cond);
    CHECK(oracle.inverse_sqrt ==
          friction_reference(cond).inverse_sqrt);
}

TEST_CASE("mismatched span sizes are rejected") {
    std::vector<double> reynolds(8, 1e5);
    std::vector<double> roughness(7, 1e-4);
    std::vector<double> u(8);
    CHECK_THROWS_AS(
        batch::eval_u(MethodId::Eq6, reynolds, roughness, u),
        std::invalid_argument);
    std::vector<double> u_short(6);
    roughness.push_back(1e-4);
    CHECK_THROWS_AS(
        batch::eval_u(MethodId::Eq6, reynolds, roughness, u_short),
        std::invalid_argument);
}
