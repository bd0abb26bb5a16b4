#include "alleedyn/model.hpp"

#include <cmath>

namespace alleedyn {

double Mat3::det() const {
    const auto& m = *this;
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1))
         - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
         + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

double Mat3::minor_sum() const {
    const auto& m = *this;
    return (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0))
         + (m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0))
         + (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1));
}

namespace {

void require_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw NonPositiveParam(std::string("parameter must be strictly positive: ") + name);
}

}  // namespace

void validate(const RawParams& raw) {
    require_positive(raw.r, "r");
    require_positive(raw.K, "K");
    require_positive(raw.m_dim, "m_dim");
    require_positive(raw.c1, "c1");
    require_positive(raw.c2, "c2");
    require_positive(raw.theta_dim, "theta_dim");
    require_positive(raw.s1_dim, "s1_dim");
    require_positive(raw.s2_dim, "s2_dim");
    require_positive(raw.alpha1_dim, "alpha1_dim");
    require_positive(raw.alpha2_dim, "alpha2_dim");
    require_positive(raw.beta1_dim, "beta1_dim");
    require_positive(raw.beta2_dim, "beta2_dim");
    if (!(raw.m_dim < raw.K))
        throw AlleeOutOfRange("m_dim/K must lie in (0,1)");
}

void validate(const ModelParams& p) {
    require_positive(p.m, "m");
    require_positive(p.theta, "theta");
    require_positive(p.s1, "s1");
    require_positive(p.s2, "s2");
    require_positive(p.alpha1, "alpha1");
    require_positive(p.alpha2, "alpha2");
    require_positive(p.beta1, "beta1");
    require_positive(p.beta2, "beta2");
    if (!(p.m < 1.0))
        throw AlleeOutOfRange("m must lie in (0,1)");
}

ModelParams nondimensionalize(const RawParams& raw) {
    validate(raw);
    const double rK = raw.r * raw.K;
    ModelParams p{
        .m = raw.m_dim / raw.K,
        .theta = raw.theta_dim * raw.K,
        .s1 = raw.s1_dim / rK,
        .s2 = raw.s2_dim / rK,
        .alpha1 = raw.alpha1_dim / raw.r,
        .alpha2 = raw.alpha2_dim / raw.r,
        .beta1 = raw.beta1_dim / raw.c2,
        .beta2 = raw.beta2_dim / raw.c1,
    };
    validate(p);
    return p;
}

State vector_field(const ModelParams& p, const State& s) {
    const double x = s.x, y1 = s.y1, y2 = s.y2;
    const double d = 1.0 + p.theta * x;
    return State{
        .x = x * (1.0 - x) * (x - p.m) - x * y1 / d - x * y2,
        .y1 = -p.s1 * y1 + p.alpha1 * x * y1 / d - p.beta1 * y1 * y2,
        .y2 = -p.s2 * y2 + p.alpha2 * x * y2 - p.beta2 * y1 * y2,
    };
}

Mat3 jacobian(const ModelParams& p, const State& s) {
    const double x = s.x, y1 = s.y1, y2 = s.y2;
    const double d = 1.0 + p.theta * x;
    const double d2 = d * d;
    Mat3 J;
    J(0, 0) = -3.0 * x * x + 2.0 * (p.m + 1.0) * x - p.m - y1 / d2 - y2;
    J(0, 1) = -x / d;
    J(0, 2) = -x;
    J(1, 0) = p.alpha1 * y1 / d2;
    J(1, 1) = -p.s1 + p.alpha1 * x / d - p.beta1 * y2;
    J(1, 2) = -p.beta1 * y1;
    J(2, 0) = p.alpha2 * y2;
    J(2, 1) = -p.beta2 * y2;
    J(2, 2) = -p.s2 + p.alpha2 * x - p.beta2 * y1;
    return J;
}

Mat3 jacobian_fd(const ModelParams& p, const State& s, double h) {
    if (!(h > 0.0))
        throw InvalidStep("finite-difference step must be positive");
    Mat3 J;
    for (int c = 0; c < 3; ++c) {
        State lo = s, hi = s;
        double* lo_c = c == 0 ? &lo.x : c == 1 ? &lo.y1 : &lo.y2;
        double* hi_c = c == 0 ? &hi.x : c == 1 ? &hi.y1 : &hi.y2;
        *lo_c -= h;
        *hi_c += h;
        const State flo = vector_field(p, lo);
        const State fhi = vector_field(p, hi);
        J(0, c) = (fhi.x - flo.x) / (2.0 * h);
        J(1, c) = (fhi.y1 - flo.y1) / (2.0 * h);
        J(2, c) = (fhi.y2 - flo.y2) / (2.0 * h);
    }
    return J;
}

}  // namespace alleedyn
