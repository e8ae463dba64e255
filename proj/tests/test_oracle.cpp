// Reference-solver tests. The solvers under test are iterative, so every
// derived value is checked against an independent bisection oracle first:
// bisection needs nothing but sign changes, converges unconditionally, and
// shares no code with the implementations it checks.

#include <cmath>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "frictionlab/core.hpp"
#include "frictionlab/oracle.hpp"

using namespace frictionlab;

namespace {

/// Bisection on the residual: positive below the root, negative above.
double bisect_friction(const FlowConditions& cond) {
    double lo = 0.004;
    double hi = 0.09;
    REQUIRE(colebrook_residual(lo, cond) > 0.0);
    REQUIRE(colebrook_residual(hi, cond) < 0.0);
    for (int i = 0; i < 120; ++i) {
        const double mid = 0.5 * (lo + hi);
        (colebrook_residual(mid, cond) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

/// Bisection on g(w) = w + ln w - x, strictly increasing in w.
double bisect_omega(double x) {
    double lo = 1e-8;
    double hi = x + 1.0;
    REQUIRE(lo + std::log(lo) - x < 0.0);
    REQUIRE(hi + std::log(hi) - x > 0.0);
    for (int i = 0; i < 160; ++i) {
        const double mid = 0.5 * (lo + hi);
        ((mid + std::log(mid) - x) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

const std::vector<double> kSampleReynolds{4039.75, 1e4, 1e5, 1e6, 1e7, 9.9e7};
const std::vector<double> kSampleRoughness{0.0, 1e-6, 1e-4, 1e-3, 1e-2, 0.0493};

}  // namespace

TEST_CASE("fixed-point reference agrees with bisection everywhere sampled") {
    for (const double reynolds : kSampleReynolds) {
        for (const double eps : kSampleRoughness) {
            const FlowConditions cond{reynolds, eps};
            const double f_bisect = bisect_friction(cond);
            const double f_ref = friction_reference(cond).friction_factor;
            CHECK(relative_error_percent(f_ref, f_bisect) < 1e-10);
        }
    }
}

TEST_CASE("omega evaluator agrees with bisection over its whole range") {
    for (const double x : {1.0, 1.5, 2.0, std::exp(1.0) + 1.0, 7.51, 10.0, 100.0,
                           1e3, 1e4, 618188.0, 1e6}) {
        const double w_bisect = bisect_omega(x);
        const double w = wright_omega(x);
        CHECK(std::fabs(w - w_bisect) / w_bisect < 1e-12);
    }
}

TEST_CASE("transformed argument and omega match high-precision goldens") {
    // Golden values computed with 50-digit arbitrary-precision arithmetic.
    struct Golden {
        double reynolds, eps, x, omega;
    };
    const Golden goldens[] = {
        {4000.0, 1e-6, 7.5151466878, 5.7635867136},
        {1e4, 1e-5, 8.4433062875, 6.5620094178},
        {1e5, 1e-3, 23.0969320046, 20.0963917219},
        {1e8, 0.05, 618187.8426862811, 618174.5081602088},
    };
    for (const Golden& g : goldens) {
        const double x = compute_x({g.reynolds, g.eps});
        CHECK(std::fabs(x - g.x) / g.x < 1e-10);
        CHECK(std::fabs(wright_omega(x) - g.omega) / g.omega < 1e-10);
    }
}

TEST_CASE("omega closed-form identities") {
    // w + ln w = 1 at w = 1.
    CHECK(wright_omega(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    // w + ln w = e + 1 at w = e.
    CHECK(wright_omega(std::exp(1.0) + 1.0) ==
          doctest::Approx(std::exp(1.0)).epsilon(1e-14));
    CHECK_THROWS_AS((void)wright_omega(0.5), std::invalid_argument);
}

TEST_CASE("omega defining identity and monotonicity on 1000 points") {
    const double x_lo = 1.0;
    const double x_hi = 618188.0;
    const double step = std::log(x_hi / x_lo) / 999.0;
    double prev_w = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double x = x_lo * std::exp(step * i);
        const double w = wright_omega(x);
        CHECK(std::fabs(w + std::log(w) - x) / x < 1e-14);
        CHECK(w > prev_w);
        prev_w = w;
    }
}

TEST_CASE("series approximant closed form") {
    const double e = std::exp(1.0);
    // y(x) = x - ln x + ln x / x at x = e: e - 1 + 1/e.
    CHECK(series_y(e) == doctest::Approx(e - 1.0 + 1.0 / e).epsilon(1e-15));
    // The series over-/under-shoots omega by well under 0.08 relative in
    // its advertised range, and by under 1e-3 beyond x = 100.
    for (const double x : {7.51, 10.0, 50.0, 200.0, 1e4, 618188.0}) {
        const double rel = std::fabs(series_y(x) - wright_omega(x)) / wright_omega(x);
        CHECK(rel < 0.08);
        if (x > 100.0) {
            CHECK(rel < 1e-3);
        }
    }
}

TEST_CASE("reference residual and dual-solver agreement") {
    for (const double reynolds : kSampleReynolds) {
        for (const double eps : kSampleRoughness) {
            const FlowConditions cond{reynolds, eps};
            const FrictionResult fp = friction_reference(cond);
            const FrictionResult lw = friction_exact_lambert(cond);
            CHECK(std::fabs(colebrook_residual(fp.friction_factor, cond)) < 1e-12);
            CHECK(std::fabs(fp.inverse_sqrt - lw.inverse_sqrt) / fp.inverse_sqrt < 1e-10);
        }
    }
}

TEST_CASE("naive exp-first evaluation overflows past the binary64 ceiling") {
    const NaiveWResult below = naive_w_exp(709.0);
    CHECK_FALSE(below.overflow);
    CHECK(below.value > 0.0);

    const NaiveWResult above = naive_w_exp(710.0);
    CHECK(above.overflow);

    // Where it does not overflow it solves the same equation as the stable
    // evaluator.
    for (const double x : {1.0, 7.51, 20.0, 100.0, 700.0}) {
        const NaiveWResult naive = naive_w_exp(x);
        REQUIRE_FALSE(naive.overflow);
        CHECK(std::fabs(naive.value - wright_omega(x)) / wright_omega(x) < 1e-9);
    }

    // Below x = 1 the naive route still works (the stable evaluator's domain
    // starts at 1; the constant w(0) ~ 0.56714 is a classic spot value).
    const NaiveWResult at_zero = naive_w_exp(0.0);
    REQUIRE_FALSE(at_zero.overflow);
    CHECK(at_zero.value == doctest::Approx(0.567143290409784).epsilon(1e-10));
}
