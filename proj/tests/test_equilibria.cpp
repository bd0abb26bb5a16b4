#include <doctest.h>

#include <cmath>
#include <random>

#include "alleedyn/equilibria.hpp"
#include "helpers.hpp"

using namespace alleedyn;

namespace {

const Equilibrium& find(const std::vector<Equilibrium>& eqs, EqLabel l) {
    for (const auto& e : eqs)
        if (e.label == l) return e;
    throw std::runtime_error("label not present");
}

double residual(const ModelParams& p, const State& s) {
    return inf_norm(vector_field(p, s));
}

}  // namespace

TEST_CASE("boundary points at the second time-series setup") {
    const ModelParams p = testutil::setup_b();
    const auto eqs = boundary_equilibria(p);
    REQUIRE(eqs.size() == 4);

    const auto& e1 = find(eqs, EqLabel::E1);
    CHECK(e1.point.x == 1.0);
    CHECK(e1.feasible);

    const auto& e2 = find(eqs, EqLabel::E2);
    CHECK(e2.point.x == doctest::Approx(0.02).epsilon(1e-14));

    const auto& e3 = find(eqs, EqLabel::E3);
    CHECK(e3.point.x == doctest::Approx(0.4).epsilon(1e-14));
    CHECK(e3.point.y1 == 0.0);
    CHECK(e3.point.y2 == doctest::Approx(0.228).epsilon(1e-14));
    CHECK(e3.feasible);

    const auto& e4 = find(eqs, EqLabel::E4);
    CHECK(e4.point.x == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(e4.point.y2 == 0.0);
    CHECK(e4.feasible);
    // the second coordinate is pinned by the prey nullcline at x4
    const double x4 = e4.point.x;
    CHECK(e4.point.y1 ==
          doctest::Approx((1.0 + p.theta * x4) * (1.0 - x4) * (x4 - p.m)).epsilon(1e-14));
}

TEST_CASE("every finite boundary point zeroes the vector field") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 300; ++i) {
        const ModelParams p = testutil::random_params(rng);
        for (const auto& e : boundary_equilibria(p)) {
            if (!std::isfinite(e.point.x)) continue;
            CHECK(residual(p, e.point) < 1e-10 * std::max(1.0, inf_norm(e.point)));
        }
    }
}

TEST_CASE("degenerate denominator keeps the list at four entries") {
    ModelParams p = testutil::setup_a();
    p.alpha1 = p.theta * p.s1;  // 0.1
    const auto eqs = boundary_equilibria(p);
    REQUIRE(eqs.size() == 4);
    const auto& e4 = find(eqs, EqLabel::E4);
    CHECK(!e4.feasible);
    CHECK(std::isnan(e4.point.x));
    REQUIRE(e4.existence_conditions.size() == 1);
    CHECK(!e4.existence_conditions[0].holds);
}

TEST_CASE("family validation and expansion") {
    CHECK_THROWS_AS(validate(ConstrainedFamily{0.5, 1.0, 0.3, 0.3}), AlleeOutOfRange);
    CHECK_THROWS_AS(validate(ConstrainedFamily{-0.1, 1.0, 0.3, 0.3}), NonPositiveParam);

    const ConstrainedFamily f{0.2, 1.0, 0.3, 0.62};
    const ModelParams p = expand_family(f);
    CHECK(p.m == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(p.theta == 1.0);
    CHECK(p.s2 == p.s1);
    CHECK(p.beta2 == p.beta1);
}

TEST_CASE("discriminant vanishes at the tangency value") {
    const ConstrainedFamily f{0.2, 1.0, 0.3, 0.62};
    CHECK(discriminant(f) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(testutil::double_root_alpha2(0.2, 1.0) == doctest::Approx(0.62).epsilon(1e-14));

    std::mt19937_64 rng(31);
    for (int i = 0; i < 100; ++i) {
        ConstrainedFamily g = testutil::random_family(rng);
        g.alpha2 = testutil::double_root_alpha2(g.s1, g.beta1);
        CHECK(std::abs(discriminant(g)) < 1e-12 * std::max(1.0, g.alpha2));
    }
}

TEST_CASE("double root sits exactly at s1/beta1") {
    std::mt19937_64 rng(37);
    for (int i = 0; i < 100; ++i) {
        ConstrainedFamily f = testutil::random_family(rng);
        f.alpha2 = testutil::double_root_alpha2(f.s1, f.beta1);
        const auto eqs = internal_equilibria_constrained(f);
        REQUIRE(eqs.size() == 1);
        CHECK(eqs[0].label == EqLabel::E5);
        CHECK(std::abs(eqs[0].point.x - f.s1 / f.beta1) < 1e-12);
    }
}

TEST_CASE("quadratic roots satisfy the Vieta identities") {
    std::mt19937_64 rng(41);
    int checked = 0;
    while (checked < 100) {
        ConstrainedFamily f = testutil::random_family(rng);
        // comfortably positive discriminant, away from the tolerance band
        f.alpha2 = testutil::double_root_alpha2(f.s1, f.beta1)
                 - testutil::uniform(rng, 0.05, 0.5);
        if (f.alpha2 <= 0.0) continue;
        const double qa = f.beta1 * f.beta1;
        const double qc = 2.0 * f.alpha2 * f.beta1 - f.beta1 * f.s1 - 1.0;
        const auto eqs = internal_equilibria_constrained(f);
        if (eqs.size() != 2) continue;  // one root fell at x <= 0
        const double r1 = eqs[0].point.x, r2 = eqs[1].point.x;
        CHECK(std::abs(r1 + r2 - 2.0 * f.s1 / f.beta1) < 1e-12);
        CHECK(std::abs(r1 * r2 - qc / qa) < 1e-12);
        ++checked;
    }
}

TEST_CASE("negative discriminant yields no interior candidates") {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 50; ++i) {
        ConstrainedFamily f = testutil::random_family(rng);
        f.alpha2 = testutil::double_root_alpha2(f.s1, f.beta1)
                 + testutil::uniform(rng, 0.05, 0.5);
        CHECK(internal_equilibria_constrained(f).empty());
    }
}

TEST_CASE("quadratic shortcut agrees with the full root-finder on its locus") {
    std::mt19937_64 rng(47);
    int checked = 0;
    while (checked < 100) {
        ConstrainedFamily f = testutil::random_family(rng);
        f.alpha1 = testutil::locus_alpha1(f.alpha2, f.beta1);
        if (f.alpha1 <= 0.0) continue;
        const auto quad = internal_equilibria_constrained(f);
        if (quad.empty()) { ++checked; continue; }

        double x_hi = 0.0;
        for (const auto& e : quad) x_hi = std::max(x_hi, e.point.x);
        const auto gen = internal_equilibria_general(expand_family(f), 1.5 * x_hi + 1.0);
        for (const auto& q : quad) {
            double best = 1e9;
            for (const auto& g : gen) best = std::min(best, std::abs(g.point.x - q.point.x));
            CHECK(best < 1e-9);
        }
        ++checked;
    }
}

TEST_CASE("quadratic points are genuine equilibria when both rates coincide") {
    // with beta1 = 1 the shortcut's second-predator expression matches the
    // nullcline exactly, so its points must zero the full vector field
    std::mt19937_64 rng(59);
    int checked = 0;
    while (checked < 50) {
        const double s1 = testutil::uniform(rng, 0.05, 0.45);
        const double alpha2 = testutil::uniform(rng, 0.05, 1.5);
        const ConstrainedFamily f{s1, 1.0, alpha2, alpha2};
        const auto quad = internal_equilibria_constrained(f);
        if (quad.empty()) continue;
        for (const auto& q : quad)
            for (const auto& c : q.existence_conditions)
                if (c.name == "vector_field_residual_ok") CHECK(c.holds);
        ++checked;
    }
}

TEST_CASE("full root-finder output zeroes the vector field") {
    std::mt19937_64 rng(53);
    for (int i = 0; i < 100; ++i) {
        const ModelParams p = testutil::random_params(rng);
        for (const auto& e : internal_equilibria_general(p)) {
            CHECK(e.point.x > 0.0);
            CHECK(e.point.x <= 1.0 + 1e-12);
            bool res = false;
            for (const auto& c : e.existence_conditions)
                if (c.name == "vector_field_residual_ok") res = c.holds;
            CHECK(res);
        }
    }
    CHECK_THROWS_AS(internal_equilibria_general(testutil::setup_a(), 0.0), InvalidRange);
}

TEST_CASE("interior point found at the second setup") {
    const auto eqs = internal_equilibria_general(testutil::setup_b());
    REQUIRE(eqs.size() == 1);
    CHECK(eqs[0].feasible);
    CHECK(eqs[0].point.x == doctest::Approx(0.6138740200454387).epsilon(1e-9));
}
