#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "alleedyn/equilibria.hpp"
#include "alleedyn/model.hpp"

namespace alleedyn {

enum class Method { RK4, RK45 };

const char* to_string(Method m);

struct IntegrationOpts {
    Method method = Method::RK45;
    double dt = 1e-2;       // RK4 fixed step / RK45 initial step
    double rtol = 1e-9;
    double atol = 1e-12;
    double dt_min = 1e-12;
    double dt_max = 10.0;
    double t_end = 2000.0;
    int record_every = 0;   // 0 = method default (RK45: 1, RK4: 10)
};

void validate(const IntegrationOpts& opts);

struct Trajectory {
    std::vector<double> times;
    std::vector<State> states;
    struct Meta {
        Method method;
        double dt, rtol, atol;
        std::string termination;
        bool clamp_warning = false;  // undershoot below -1e-12 was clamped
    } meta;

    const State& back() const { return states.back(); }
};

/// Integrates the system from init to t_end. Throws StepUnderflow when the
/// adaptive step falls below dt_min, NonFiniteState on NaN/Inf.
Trajectory integrate(const ModelParams& p, const State& init, const IntegrationOpts& opts);

struct ConvergenceResult {
    bool converged;
    std::optional<double> time;  ///< first sample entering and never leaving the tol-ball
};

/// converged iff every sample in the trailing 10% of the trajectory is
/// within tol of target (inf norm).
ConvergenceResult detect_convergence(const Trajectory& t, const State& target, double tol);

/// Fraction of perturbed starts (uniform on the sphere of given radius,
/// clamped into the nonnegative orthant) that converge back within t_end.
double basin_probe(const ModelParams& p, const Equilibrium& eq, double radius,
                   int n_samples, double t_end, std::uint64_t seed = 42);

}  // namespace alleedyn
