#include "alleedyn/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace alleedyn {

const char* to_string(Method m) {
    return m == Method::RK4 ? "rk4" : "rk45";
}

void validate(const IntegrationOpts& opts) {
    if (!(opts.dt > 0.0)) throw InvalidStep("dt must be positive");
    if (!(opts.t_end > 0.0)) throw InvalidRange("t_end must be positive");
    if (!(opts.rtol > 0.0) || !(opts.atol > 0.0))
        throw InvalidRange("tolerances must be positive");
    if (!(opts.dt_min > 0.0) || !(opts.dt_max >= opts.dt_min))
        throw InvalidRange("need 0 < dt_min <= dt_max");
    if (opts.record_every < 0) throw InvalidRange("record_every must be >= 0");
}

namespace {

State axpy(const State& s, double h, const State& d) {
    return State{s.x + h * d.x, s.y1 + h * d.y1, s.y2 + h * d.y2};
}

void check_finite(const State& s) {
    if (!std::isfinite(s.x) || !std::isfinite(s.y1) || !std::isfinite(s.y2))
        throw NonFiniteState("state became non-finite during integration");
}

// Clamps small negative undershoot back into the nonnegative orthant.
// Components already exactly zero are untouched, keeping axis invariance
// bitwise. Returns true when the undershoot exceeded -1e-12.
bool clamp_orthant(State& s) {
    bool warn = false;
    for (double* v : {&s.x, &s.y1, &s.y2}) {
        if (*v < 0.0) {
            if (*v < -1e-12) warn = true;
            *v = 0.0;
        }
    }
    return warn;
}

State rk4_step(const ModelParams& p, const State& s, double h) {
    const State k1 = vector_field(p, s);
    const State k2 = vector_field(p, axpy(s, 0.5 * h, k1));
    const State k3 = vector_field(p, axpy(s, 0.5 * h, k2));
    const State k4 = vector_field(p, axpy(s, h, k3));
    return State{
        s.x + h / 6.0 * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x),
        s.y1 + h / 6.0 * (k1.y1 + 2.0 * k2.y1 + 2.0 * k3.y1 + k4.y1),
        s.y2 + h / 6.0 * (k1.y2 + 2.0 * k2.y2 + 2.0 * k3.y2 + k4.y2),
    };
}

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

struct Rk45Step {
    State next;
    double err;  // weighted error norm
};

Rk45Step rk45_step(const ModelParams& p, const State& s, double h,
                   double rtol, double atol) {
    const State k1 = vector_field(p, s);
    const State k2 = vector_field(p, axpy(s, h * a21, k1));
    auto comb = [&](std::initializer_list<std::pair<double, const State*>> terms) {
        State r = s;
        for (auto [w, k] : terms) r = axpy(r, h * w, *k);
        return r;
    };
    const State k3 = vector_field(p, comb({{a31, &k1}, {a32, &k2}}));
    const State k4 = vector_field(p, comb({{a41, &k1}, {a42, &k2}, {a43, &k3}}));
    const State k5 = vector_field(p, comb({{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
    const State k6 = vector_field(p, comb({{a61, &k1}, {a62, &k2}, {a63, &k3},
                                           {a64, &k4}, {a65, &k5}}));
    const State y5 = comb({{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
    const State k7 = vector_field(p, y5);

    const double ex = h * (e1 * k1.x + e3 * k3.x + e4 * k4.x + e5 * k5.x
                           + e6 * k6.x + e7 * k7.x);
    const double ey1 = h * (e1 * k1.y1 + e3 * k3.y1 + e4 * k4.y1 + e5 * k5.y1
                            + e6 * k6.y1 + e7 * k7.y1);
    const double ey2 = h * (e1 * k1.y2 + e3 * k3.y2 + e4 * k4.y2 + e5 * k5.y2
                            + e6 * k6.y2 + e7 * k7.y2);
    auto w = [&](double e, double y0, double y1v) {
        return std::abs(e) / (atol + rtol * std::max(std::abs(y0), std::abs(y1v)));
    };
    const double err = std::max({w(ex, s.x, y5.x), w(ey1, s.y1, y5.y1),
                                 w(ey2, s.y2, y5.y2)});
    return {y5, err};
}

}  // namespace

Trajectory integrate(const ModelParams& p, const State& init, const IntegrationOpts& opts) {
    validate(p);
    validate(opts);
    if (init.x < 0.0 || init.y1 < 0.0 || init.y2 < 0.0)
        throw InvalidRange("initial state must lie in the nonnegative orthant");

    Trajectory traj;
    traj.meta = {opts.method, opts.dt, opts.rtol, opts.atol, "reached t_end", false};
    const int stride = opts.record_every > 0 ? opts.record_every
                       : (opts.method == Method::RK4 ? 10 : 1);

    State s = init;
    double t = 0.0;
    traj.times.push_back(t);
    traj.states.push_back(s);

    if (opts.method == Method::RK4) {
        const double h = opts.dt;
        const long n = static_cast<long>(std::ceil(opts.t_end / h - 1e-12));
        for (long i = 1; i <= n; ++i) {
            const double step = std::min(h, opts.t_end - t);
            s = rk4_step(p, s, step);
            check_finite(s);
            traj.meta.clamp_warning |= clamp_orthant(s);
            t = (i == n) ? opts.t_end : i * h;
            if (i % stride == 0 || i == n) {
                traj.times.push_back(t);
                traj.states.push_back(s);
            }
        }
        return traj;
    }

    double h = std::min(opts.dt, opts.dt_max);
    long accepted = 0;
    while (t < opts.t_end) {
        h = std::min(h, opts.t_end - t);
        const Rk45Step step = rk45_step(p, s, h, opts.rtol, opts.atol);
        if (step.err <= 1.0) {
            t += h;
            s = step.next;
            check_finite(s);
            traj.meta.clamp_warning |= clamp_orthant(s);
            ++accepted;
            if (accepted % stride == 0 || t >= opts.t_end) {
                traj.times.push_back(t);
                traj.states.push_back(s);
            }
        }
        const double factor = step.err > 0.0
            ? std::clamp(0.9 * std::pow(step.err, -0.2), 0.2, 5.0)
            : 5.0;
        h = std::min(h * factor, opts.dt_max);
        if (h < opts.dt_min && t < opts.t_end)
            throw StepUnderflow("adaptive step fell below dt_min");
    }
    return traj;
}

ConvergenceResult detect_convergence(const Trajectory& t, const State& target, double tol) {
    if (!(tol > 0.0)) throw InvalidRange("tolerance must be positive");
    const std::size_t n = t.states.size();
    if (n == 0) return {false, std::nullopt};

    auto dist = [&](const State& s) {
        return std::max({std::abs(s.x - target.x), std::abs(s.y1 - target.y1),
                         std::abs(s.y2 - target.y2)});
    };

    const double t_tail = t.times.back() - 0.1 * (t.times.back() - t.times.front());
    bool converged = true;
    for (std::size_t i = 0; i < n; ++i) {
        if (t.times[i] >= t_tail && dist(t.states[i]) >= tol) {
            converged = false;
            break;
        }
    }
    if (!converged) return {false, std::nullopt};

    // first sample entering the ball and never leaving it again
    std::size_t first = n;
    for (std::size_t i = n; i-- > 0;) {
        if (dist(t.states[i]) < tol) first = i;
        else break;
    }
    if (first == n) return {false, std::nullopt};
    return {true, t.times[first]};
}

double basin_probe(const ModelParams& p, const Equilibrium& eq, double radius,
                   int n_samples, double t_end, std::uint64_t seed) {
    validate(p);
    if (!(radius >= 0.0)) throw InvalidRange("radius must be nonnegative");
    if (n_samples <= 0) throw InvalidRange("n_samples must be positive");

    if (radius == 0.0) return 1.0;

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;

    IntegrationOpts opts;
    opts.t_end = t_end;

    int back = 0;
    for (int i = 0; i < n_samples; ++i) {
        double dx = gauss(rng), dy1 = gauss(rng), dy2 = gauss(rng);
        const double norm = std::sqrt(dx * dx + dy1 * dy1 + dy2 * dy2);
        if (norm == 0.0) { ++back; continue; }
        State start{eq.point.x + radius * dx / norm,
                    eq.point.y1 + radius * dy1 / norm,
                    eq.point.y2 + radius * dy2 / norm};
        start.x = std::max(start.x, 0.0);
        start.y1 = std::max(start.y1, 0.0);
        start.y2 = std::max(start.y2, 0.0);
        try {
            const Trajectory tr = integrate(p, start, opts);
            if (detect_convergence(tr, eq.point, 1e-6).converged) ++back;
        } catch (const Error&) {
            // divergence counts as not returning
        }
    }
    return static_cast<double>(back) / n_samples;
}

}  // namespace alleedyn
