#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "skidkit/error.hpp"
#include "skidkit/friction.hpp"

using namespace skidkit;

TEST_CASE("friction_coefficient: mu = a/g") {
    auto f = friction_coefficient(9.80665, 9.80665);
    CHECK(f.mu == 1.0);

    // experiment-8 reference-method mean
    auto e8 = friction_coefficient(9.7216, 9.80665);
    CHECK(e8.mu == doctest::Approx(0.99133).epsilon(1e-4));
    CHECK(e8.a_sz == 9.7216);
    CHECK(e8.g == 9.80665);
    CHECK_FALSE(e8.ci_mu.has_value());

    CHECK(friction_coefficient(0.0, 9.80665).mu == 0.0);
}

TEST_CASE("friction_coefficient: scale consistency and CI mapping") {
    auto a = friction_coefficient(7.5, 9.80665);
    auto b = friction_coefficient(3.0 * 7.5, 3.0 * 9.80665);
    CHECK(a.mu == doctest::Approx(b.mu).epsilon(1e-15));

    auto withCi =
        friction_coefficient(7.5, 9.80665, std::pair<double, double>{7.2, 7.8});
    REQUIRE(withCi.ci_mu.has_value());
    CHECK(withCi.ci_mu->first == doctest::Approx(7.2 / 9.80665));
    CHECK(withCi.ci_mu->second == doctest::Approx(7.8 / 9.80665));

    CHECK_THROWS_AS(friction_coefficient(-1.0, 9.80665), Error);
    CHECK_THROWS_AS(friction_coefficient(5.0, 0.0), Error);
}

TEST_CASE("speed_at_sz: v = sqrt(2 mu g d)") {
    CHECK(speed_at_sz(0.8, 0.0, 9.80665).v_sz == 0.0);

    auto s = speed_at_sz(0.8, 10.0, 9.80665);
    CHECK(s.v_sz == doctest::Approx(12.5261).epsilon(1e-4));
    CHECK(s.v_kmh() == doctest::Approx(45.09).epsilon(1e-3));
    CHECK(s.v_kmh() == 3.6 * s.v_sz);
    CHECK(s.d_sz == 10.0);
    CHECK(s.mu == 0.8);
    // invariant restated
    CHECK(s.v_sz * s.v_sz ==
          doctest::Approx(2.0 * 0.8 * 9.80665 * 10.0).epsilon(1e-12));

    CHECK_THROWS_AS(speed_at_sz(-0.1, 10.0, 9.80665), Error);
    CHECK_THROWS_AS(speed_at_sz(0.8, -1.0, 9.80665), Error);
    CHECK_THROWS_AS(speed_at_sz(0.8, 10.0, 0.0), Error);
}

TEST_CASE("speed_propagated_error") {
    CHECK(speed_propagated_error(0.8, 10.0, 0.0, 0.0, 9.80665) == 0.0);

    // 5% mu uncertainty alone -> 2.5% of v
    double v = speed_at_sz(0.8, 10.0, 9.80665).v_sz;
    double dv = speed_propagated_error(0.8, 10.0, 0.04, 0.0, 9.80665);
    CHECK(dv == doctest::Approx(0.025 * v).epsilon(1e-12));
    CHECK(dv == doctest::Approx(0.3132).epsilon(1e-3));

    // matching 2% relative errors on both inputs -> 2% of v
    double dv2 = speed_propagated_error(0.8, 10.0, 0.016, 0.2, 9.80665);
    CHECK(dv2 == doctest::Approx(0.02 * v).epsilon(1e-12));

    // zero mu or distance with requested uncertainty is undefined
    CHECK_THROWS_AS(speed_propagated_error(0.0, 10.0, 0.01, 0.0, 9.80665),
                    Error);
    CHECK_THROWS_AS(speed_propagated_error(0.8, 0.0, 0.0, 0.1, 9.80665),
                    Error);
}
