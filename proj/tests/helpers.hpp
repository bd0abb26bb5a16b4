#pragma once

#include <random>

#include "alleedyn/equilibria.hpp"
#include "alleedyn/model.hpp"

namespace testutil {

using alleedyn::ConstrainedFamily;
using alleedyn::ModelParams;
using alleedyn::State;

// The two time-series setups used throughout the docs and examples.
inline ModelParams setup_a() {
    return ModelParams{0.2, 0.5, 0.2, 0.3, 0.2, 0.1, 0.15, 0.12};
}
inline ModelParams setup_b() {
    return ModelParams{0.02, 0.5, 0.08, 0.04, 0.2, 0.1, 0.15, 0.12};
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline ModelParams random_params(std::mt19937_64& rng) {
    return ModelParams{
        uniform(rng, 0.05, 0.95),  // m
        uniform(rng, 0.1, 2.0),    // theta
        uniform(rng, 0.05, 1.0),   // s1
        uniform(rng, 0.05, 1.0),   // s2
        uniform(rng, 0.05, 1.5),   // alpha1
        uniform(rng, 0.05, 1.5),   // alpha2
        uniform(rng, 0.05, 1.5),   // beta1
        uniform(rng, 0.05, 1.5),   // beta2
    };
}

inline State random_state(std::mt19937_64& rng) {
    return State{uniform(rng, 0.0, 1.2), uniform(rng, 0.0, 1.2), uniform(rng, 0.0, 1.2)};
}

// Family draw with 0 < s1 < beta1/2 guaranteed.
inline ConstrainedFamily random_family(std::mt19937_64& rng) {
    const double beta1 = uniform(rng, 0.3, 2.0);
    const double s1 = uniform(rng, 0.05, 0.45) * beta1;
    return ConstrainedFamily{s1, beta1,
                             uniform(rng, 0.05, 1.5),   // alpha1
                             uniform(rng, 0.05, 1.5)};  // alpha2
}

// alpha2 value at which the family's quadratic has a double root.
inline double double_root_alpha2(double s1, double beta1) {
    return (s1 * s1 + s1 * beta1 + 1.0) / (2.0 * beta1);
}

// alpha1 making the quadratic shortcut agree with the full vector field.
inline double locus_alpha1(double alpha2, double beta1) {
    return alpha2 + beta1 - 1.0 / beta1;
}

}  // namespace testutil
