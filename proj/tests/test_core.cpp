#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "frictionlab/core.hpp"
#include "frictionlab/oracle.hpp"

using namespace frictionlab;

TEST_CASE("method names round-trip through the catalog") {
    for (const MethodId id : kAllMethods) {
        MethodId parsed;
        REQUIRE(method_from_name(method_name(id), parsed));
        CHECK(parsed == id);
        CHECK(!method_description(id).empty());
    }
    MethodId unused;
    CHECK_FALSE(method_from_name("colebrook", unused));
    CHECK_FALSE(method_from_name("", unused));
    CHECK_FALSE(method_from_name("EQ3", unused));  // tokens are case-sensitive
}

TEST_CASE("catalog partitions: 2 references + 16 scanned methods") {
    CHECK(std::size(kAllMethods) == 18);
    CHECK(std::size(kScanMethods) == 16);
    for (const MethodId id : kScanMethods) {
        CHECK(id != MethodId::OracleFixedPoint);
        CHECK(id != MethodId::OracleLambert);
    }
}

TEST_CASE("domain validation separates bad input from out-of-band input") {
    const DomainStatus inside = validate_domain({1e5, 1e-4});
    CHECK(inside.inside_colebrook_domain);
    CHECK(inside.violations.empty());

    // Smooth-pipe limit is admitted.
    CHECK(validate_domain({1e5, 0.0}).inside_colebrook_domain);

    // Strict bounds: the borders themselves are outside.
    const DomainStatus low = validate_domain({4000.0, 1e-4});
    CHECK_FALSE(low.inside_colebrook_domain);
    REQUIRE(low.violations.size() == 1);
    CHECK(low.violations[0].bound == "reynolds_lower");
    CHECK(low.violations[0].value == 4000.0);

    const DomainStatus high = validate_domain({1e8, 1e-4});
    CHECK_FALSE(high.inside_colebrook_domain);
    REQUIRE(high.violations.size() == 1);
    CHECK(high.violations[0].bound == "reynolds_upper");

    const DomainStatus rough = validate_domain({1e5, 0.05});
    CHECK_FALSE(rough.inside_colebrook_domain);
    REQUIRE(rough.violations.size() == 1);
    CHECK(rough.violations[0].bound == "roughness_upper");

    const DomainStatus both = validate_domain({100.0, 0.2});
    CHECK_FALSE(both.inside_colebrook_domain);
    CHECK(both.violations.size() == 2);

    // Non-finite or non-positive inputs are errors, not out-of-band values.
    CHECK_THROWS_AS((void)validate_domain({0.0, 1e-4}), std::invalid_argument);
    CHECK_THROWS_AS((void)validate_domain({-5.0, 1e-4}), std::invalid_argument);
    CHECK_THROWS_AS((void)validate_domain({1e5, -1e-9}), std::invalid_argument);
    CHECK_THROWS_AS((void)validate_domain({std::nan(""), 1e-4}), std::invalid_argument);
    CHECK_THROWS_AS((void)validate_domain({1e5, std::nan("")}), std::invalid_argument);
}

TEST_CASE("result construction ties f and u together") {
    const FrictionResult r = make_result_from_u(5.0, MethodId::Eq3);
    CHECK(r.inverse_sqrt == 5.0);
    CHECK(r.friction_factor == doctest::Approx(0.04).epsilon(1e-15));
    CHECK(r.method == MethodId::Eq3);
}

TEST_CASE("residual vanishes at the reference root and brackets it") {
    const FlowConditions cond{1e5, 1e-4};
    const double f_ref = friction_reference(cond).friction_factor;
    CHECK(std::fabs(colebrook_residual(f_ref, cond)) < 1e-12);
    // The residual decreases in f, so it is positive below the root and
    // negative above it.
    CHECK(colebrook_residual(0.9 * f_ref, cond) > 0.0);
    CHECK(colebrook_residual(1.1 * f_ref, cond) < 0.0);
}

TEST_CASE("relative error metric") {
    CHECK(relative_error_percent(1.01, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(relative_error_percent(0.99, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(relative_error_percent(-2.0, -1.0) == doctest::Approx(100.0).epsilon(1e-12));
    CHECK(relative_error_percent(3.0, 3.0) == 0.0);
    CHECK_THROWS_AS((void)relative_error_percent(1.0, 0.0), std::invalid_argument);
}
