#include <doctest.h>

#include <cmath>
#include <random>

#include "alleedyn/integrate.hpp"
#include "helpers.hpp"

using namespace alleedyn;

namespace {

IntegrationOpts rk4_opts(double dt, double t_end) {
    IntegrationOpts o;
    o.method = Method::RK4;
    o.dt = dt;
    o.t_end = t_end;
    return o;
}

double dist(const State& a, const State& b) {
    return std::max({std::abs(a.x - b.x), std::abs(a.y1 - b.y1), std::abs(a.y2 - b.y2)});
}

}  // namespace

TEST_CASE("options validation") {
    IntegrationOpts o;
    o.dt = 0.0;
    CHECK_THROWS_AS(validate(o), InvalidStep);
    o = IntegrationOpts{};
    o.t_end = -1.0;
    CHECK_THROWS_AS(validate(o), InvalidRange);
    o = IntegrationOpts{};
    o.rtol = 0.0;
    CHECK_THROWS_AS(validate(o), InvalidRange);
    o = IntegrationOpts{};
    o.dt_min = 1.0;
    o.dt_max = 0.5;
    CHECK_THROWS_AS(validate(o), InvalidRange);
    o = IntegrationOpts{};
    o.record_every = -1;
    CHECK_THROWS_AS(validate(o), InvalidRange);
}

TEST_CASE("starts outside the nonnegative orthant are rejected") {
    CHECK_THROWS_AS(
        integrate(testutil::setup_a(), State{-0.1, 0.1, 0.1}, IntegrationOpts{}),
        InvalidRange);
}

TEST_CASE("rest points stay put bitwise") {
    const ModelParams p = testutil::setup_a();
    for (auto m : {Method::RK4, Method::RK45}) {
        IntegrationOpts o;
        o.method = m;
        o.t_end = 50.0;
        const Trajectory t = integrate(p, State{1.0, 0.0, 0.0}, o);
        for (const State& s : t.states) {
            CHECK(s.x == 1.0);
            CHECK(s.y1 == 0.0);
            CHECK(s.y2 == 0.0);
        }
    }
}

TEST_CASE("absent species stay exactly absent under the fixed-step method") {
    std::mt19937_64 rng(61);
    for (int i = 0; i < 20; ++i) {
        const ModelParams p = testutil::random_params(rng);
        const Trajectory t = integrate(
            p, State{testutil::uniform(rng, 0.3, 1.0), 0.0,
                     testutil::uniform(rng, 0.0, 0.5)},
            rk4_opts(1e-2, 20.0));
        for (const State& s : t.states) CHECK(s.y1 == 0.0);

        const Trajectory u = integrate(
            p, State{testutil::uniform(rng, 0.3, 1.0),
                     testutil::uniform(rng, 0.0, 0.5), 0.0},
            rk4_opts(1e-2, 20.0));
        for (const State& s : u.states) CHECK(s.y2 == 0.0);
    }
}

TEST_CASE("fixed-step error shrinks at fourth order") {
    const ModelParams p = testutil::setup_a();
    const State init{0.9, 0.1, 0.1};
    const double t_end = 10.0;

    IntegrationOpts ref_opts;
    ref_opts.rtol = 1e-13;
    ref_opts.atol = 1e-15;
    ref_opts.t_end = t_end;
    const State ref = integrate(p, init, ref_opts).back();

    const double e1 = dist(integrate(p, init, rk4_opts(0.08, t_end)).back(), ref);
    const double e2 = dist(integrate(p, init, rk4_opts(0.04, t_end)).back(), ref);
    const double factor = e1 / e2;
    CHECK(factor > 12.0);
    CHECK(factor < 20.0);
}

TEST_CASE("adaptive and fixed-step methods agree") {
    const ModelParams p = testutil::setup_a();
    const State init{0.9, 0.1, 0.1};

    IntegrationOpts adaptive;
    adaptive.t_end = 50.0;
    const State a = integrate(p, init, adaptive).back();
    const State b = integrate(p, init, rk4_opts(1e-3, 50.0)).back();
    CHECK(dist(a, b) < 1e-6);
}

TEST_CASE("recording stride thins the output only") {
    const ModelParams p = testutil::setup_a();
    IntegrationOpts o = rk4_opts(1e-2, 1.0);
    o.record_every = 25;
    const Trajectory t = integrate(p, State{0.9, 0.1, 0.1}, o);
    CHECK(t.times.size() == 5);  // t=0 plus four recorded strides
    CHECK(t.times.back() == doctest::Approx(1.0));
}

TEST_CASE("step underflow is reported, not looped on") {
    IntegrationOpts o;
    o.rtol = 1e-14;
    o.atol = 1e-16;
    o.dt = 10.0;
    o.dt_min = 5.0;
    o.t_end = 100.0;
    CHECK_THROWS_AS(integrate(testutil::setup_a(), State{0.9, 0.1, 0.1}, o),
                    StepUnderflow);
}

TEST_CASE("convergence detection") {
    const ModelParams p = testutil::setup_a();
    IntegrationOpts o;
    o.t_end = 500.0;
    const Trajectory t = integrate(p, State{0.9, 0.1, 0.1}, o);

    const ConvergenceResult hit = detect_convergence(t, State{1.0, 0.0, 0.0}, 1e-3);
    CHECK(hit.converged);
    REQUIRE(hit.time.has_value());
    CHECK(*hit.time < 500.0);
    CHECK(*hit.time > 0.0);

    const ConvergenceResult miss = detect_convergence(t, State{0.5, 0.0, 0.0}, 1e-3);
    CHECK(!miss.converged);
    CHECK(!miss.time.has_value());

    CHECK_THROWS_AS(detect_convergence(t, State{1.0, 0.0, 0.0}, 0.0), InvalidRange);
}

TEST_CASE("perturbation probe fractions") {
    const ModelParams p = testutil::setup_a();
    const auto eqs = boundary_equilibria(p);
    const Equilibrium* e1 = nullptr;
    const Equilibrium* e2 = nullptr;
    for (const auto& e : eqs) {
        if (e.label == EqLabel::E1) e1 = &e;
        if (e.label == EqLabel::E2) e2 = &e;
    }
    REQUIRE(e1 != nullptr);
    REQUIRE(e2 != nullptr);

    CHECK(basin_probe(p, *e1, 0.0, 5, 100.0) == 1.0);
    CHECK(basin_probe(p, *e1, 1e-3, 10, 200.0) == 1.0);
    CHECK(basin_probe(p, *e2, 1e-3, 10, 400.0) < 1.0);

    CHECK_THROWS_AS(basin_probe(p, *e1, -1.0, 5, 100.0), InvalidRange);
    CHECK_THROWS_AS(basin_probe(p, *e1, 1e-3, 0, 100.0), InvalidRange);
}
