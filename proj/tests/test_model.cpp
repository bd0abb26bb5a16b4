#include <doctest.h>

#include <cmath>
#include <random>

#include "alleedyn/model.hpp"
#include "helpers.hpp"

using namespace alleedyn;

TEST_CASE("parameter validation rejects bad values") {
    ModelParams p = testutil::setup_a();
    CHECK_NOTHROW(validate(p));

    p.m = 1.5;
    CHECK_THROWS_AS(validate(p), AlleeOutOfRange);
    p.m = 0.0;
    CHECK_THROWS_AS(validate(p), NonPositiveParam);
    p = testutil::setup_a();
    p.beta2 = -0.1;
    CHECK_THROWS_AS(validate(p), NonPositiveParam);
    p.beta2 = 0.0;
    CHECK_THROWS_AS(validate(p), NonPositiveParam);
}

TEST_CASE("dimensional parameters map onto the dimensionless set") {
    RawParams raw{2.0, 10.0, 2.0, 0.5, 0.25, 0.05, 4.0, 6.0, 0.4, 0.2, 0.3, 0.06};
    const ModelParams p = nondimensionalize(raw);
    CHECK(p.m == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(p.theta == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(p.s1 == doctest::Approx(4.0 / 20.0).epsilon(1e-15));
    CHECK(p.s2 == doctest::Approx(6.0 / 20.0).epsilon(1e-15));
    CHECK(p.alpha1 == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(p.alpha2 == doctest::Approx(0.1).epsilon(1e-15));
    CHECK(p.beta1 == doctest::Approx(0.3 / 0.25).epsilon(1e-15));
    CHECK(p.beta2 == doctest::Approx(0.06 / 0.5).epsilon(1e-15));
    CHECK_NOTHROW(validate(p));

    raw.m_dim = 12.0;  // above carrying capacity
    CHECK_THROWS_AS(nondimensionalize(raw), AlleeOutOfRange);
}

TEST_CASE("species absent from the start contribute no growth") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        const ModelParams p = testutil::random_params(rng);
        State s = testutil::random_state(rng);
        s.x = 0.0;
        CHECK(vector_field(p, s).x == 0.0);
        s = testutil::random_state(rng);
        s.y1 = 0.0;
        CHECK(vector_field(p, s).y1 == 0.0);
        s = testutil::random_state(rng);
        s.y2 = 0.0;
        CHECK(vector_field(p, s).y2 == 0.0);
    }
}

TEST_CASE("analytic Jacobian matches central differences") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 1000; ++i) {
        const ModelParams p = testutil::random_params(rng);
        const State s = testutil::random_state(rng);
        const Mat3 J = jacobian(p, s);
        const Mat3 Jfd = jacobian_fd(p, s, 1e-6);
        double scale = 1.0, diff = 0.0;
        for (int k = 0; k < 9; ++k) {
            scale = std::max(scale, std::abs(J.a[k]));
            diff = std::max(diff, std::abs(J.a[k] - Jfd.a[k]));
        }
        CHECK(diff / scale < 1e-5);
    }
}

TEST_CASE("finite-difference step must be positive") {
    CHECK_THROWS_AS(jacobian_fd(testutil::setup_a(), State{0.5, 0.1, 0.1}, 0.0),
                    InvalidStep);
    CHECK_THROWS_AS(jacobian_fd(testutil::setup_a(), State{0.5, 0.1, 0.1}, -1e-6),
                    InvalidStep);
}

TEST_CASE("3x3 determinant, trace, and minor sum") {
    Mat3 M;
    M.a = {2, 0, 1,
           1, 3, 0,
           0, 1, 4};
    CHECK(M.trace() == doctest::Approx(9.0));
    CHECK(M.det() == doctest::Approx(25.0));
    // minors: (3*4-0*1) + (2*4-1*0) + (2*3-0*1) = 12 + 8 + 6
    CHECK(M.minor_sum() == doctest::Approx(26.0));
}
