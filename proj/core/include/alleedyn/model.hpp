#pragma once

#include <array>
#include <cmath>

#include "alleedyn/errors.hpp"

namespace alleedyn {

/// Dimensional parameters of the raw three-species system.
struct RawParams {
    double r;           ///< intrinsic prey growth rate (1/time)
    double K;           ///< carrying capacity (population)
    double m_dim;       ///< Allee threshold (population), 0 < m_dim < K
    double c1, c2;      ///< predation rates
    double theta_dim;   ///< semi-saturation constant (1/population)
    double s1_dim, s2_dim;         ///< predator mortalities (1/time)
    double alpha1_dim, alpha2_dim; ///< predator birth rates
    double beta1_dim, beta2_dim;   ///< interspecific disturbance rates
};

/// Dimensionless parameters of the rescaled system.
/// All fields strictly positive; 0 < m < 1 (strong Allee range).
struct ModelParams {
    double m;
    double theta;
    double s1, s2;
    double alpha1, alpha2;
    double beta1, beta2;
};

/// Population triple (prey, predator 1, predator 2), dimensionless.
struct State {
    double x{};
    double y1{};
    double y2{};
};

inline double inf_norm(const State& s) {
    return std::max({std::abs(s.x), std::abs(s.y1), std::abs(s.y2)});
}

/// 3x3 real matrix, row-major.
struct Mat3 {
    std::array<double, 9> a{};

    double& operator()(int r, int c) { return a[3 * r + c]; }
    double operator()(int r, int c) const { return a[3 * r + c]; }

    double trace() const { return a[0] + a[4] + a[8]; }
    double det() const;
    /// Sum of the three principal 2x2 minors.
    double minor_sum() const;
};

/// Throws NonPositiveParam / AlleeOutOfRange when invariants fail.
void validate(const RawParams& raw);
void validate(const ModelParams& p);

/// Maps dimensional parameters to the dimensionless set:
/// m = m_dim/K, theta = theta_dim*K, s_i = s_i_dim/(rK),
/// alpha_i = alpha_i_dim/r, beta1 = beta1_dim/c2, beta2 = beta2_dim/c1.
ModelParams nondimensionalize(const RawParams& raw);

/// Right-hand side of the dimensionless system at state s.
State vector_field(const ModelParams& p, const State& s);

/// Analytic Jacobian of the vector field at state s.
Mat3 jacobian(const ModelParams& p, const State& s);

/// Central-difference Jacobian, column by column. Test oracle.
Mat3 jacobian_fd(const ModelParams& p, const State& s, double h);

}  // namespace alleedyn
