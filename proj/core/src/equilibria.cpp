#include "alleedyn/equilibria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace alleedyn {

const char* to_string(EqLabel label) {
    switch (label) {
        case EqLabel::E1: return "E1";
        case EqLabel::E2: return "E2";
        case EqLabel::E3: return "E3";
        case EqLabel::E4: return "E4";
        case EqLabel::E5: return "E5";
        case EqLabel::E6: return "E6";
        case EqLabel::E7: return "E7";
        case EqLabel::Generic: return "Generic";
    }
    return "?";
}

namespace {

bool residual_ok(const ModelParams& p, const State& s) {
    const double scale = std::max(1.0, inf_norm(s));
    return inf_norm(vector_field(p, s)) < 1e-10 * scale;
}

}  // namespace

std::vector<Equilibrium> boundary_equilibria(const ModelParams& p) {
    validate(p);
    std::vector<Equilibrium> out;
    out.reserve(4);

    out.push_back({EqLabel::E1, State{1.0, 0.0, 0.0}, true, {}});
    out.push_back({EqLabel::E2, State{p.m, 0.0, 0.0}, true, {}});

    {
        const double x3 = p.s2 / p.alpha2;
        const double y2 = (p.alpha2 - p.s2) * (p.s2 - p.m * p.alpha2)
                        / (p.alpha2 * p.alpha2);
        const bool c1 = p.alpha2 > p.s2;
        const bool c2 = p.s2 > p.m * p.alpha2;
        out.push_back({EqLabel::E3, State{x3, 0.0, y2}, c1 && c2,
                       {{"alpha2 > s2", c1}, {"s2 > m*alpha2", c2}}});
    }

    {
        const double den = p.alpha1 - p.theta * p.s1;
        if (den == 0.0) {
            const double nan = std::numeric_limits<double>::quiet_NaN();
            out.push_back({EqLabel::E4, State{nan, nan, nan}, false,
                           {{"alpha1 - theta*s1 != 0", false}}});
        } else {
            const double x4 = p.s1 / den;
            const double a = p.alpha1 - p.theta * p.s1 - p.s1;
            const double b = p.s1 - p.m * p.alpha1 + p.m * p.theta * p.s1;
            const double y1 = p.alpha1 * a * b / (den * den * den);
            const bool c1 = den > 0.0;
            const bool c2 = a > 0.0;
            const bool c3 = b > 0.0;
            out.push_back({EqLabel::E4, State{x4, y1, 0.0}, c1 && c2 && c3,
                           {{"alpha1 > theta*s1", c1},
                            {"alpha1 - theta*s1 - s1 > 0", c2},
                            {"s1 - m*alpha1 + m*theta*s1 > 0", c3}}});
        }
    }
    return out;
}

void validate(const ConstrainedFamily& f) {
    if (!(f.s1 > 0.0) || !(f.beta1 > 0.0) || !(f.alpha1 > 0.0) || !(f.alpha2 > 0.0))
        throw NonPositiveParam("constrained family fields must be strictly positive");
    if (!(f.s1 < f.beta1 / 2.0))
        throw AlleeOutOfRange("family requires 0 < s1 < beta1/2 so that m = 2 s1/beta1 < 1");
}

ModelParams expand_family(const ConstrainedFamily& f) {
    validate(f);
    return ModelParams{
        .m = 2.0 * f.s1 / f.beta1,
        .theta = 1.0,
        .s1 = f.s1,
        .s2 = f.s1,
        .alpha1 = f.alpha1,
        .alpha2 = f.alpha2,
        .beta1 = f.beta1,
        .beta2 = f.beta1,
    };
}

double discriminant(const ConstrainedFamily& f) {
    validate(f);
    const double b1 = f.beta1, s1 = f.s1;
    return 4.0 * s1 * s1 * b1 * b1
         - 4.0 * b1 * b1 * (2.0 * f.alpha2 * b1 - s1 * b1 - 1.0);
}

namespace {

Equilibrium family_point(const ConstrainedFamily& f, const ModelParams& p,
                         EqLabel label, double x) {
    const double y1 = (-f.s1 + f.alpha2 * x) / f.beta1;
    const double y2 = (-f.s1 - f.s1 * x + f.alpha2 * x) / (f.beta1 * (1.0 + x));
    const State pt{x, y1, y2};
    const bool pos1 = y1 >= 0.0;
    const bool pos2 = y2 >= 0.0;
    return Equilibrium{label, pt, pos1 && pos2,
                       {{"y1 >= 0", pos1},
                        {"y2 >= 0", pos2},
                        {"vector_field_residual_ok", residual_ok(p, pt)}}};
}

}  // namespace

std::vector<Equilibrium> internal_equilibria_constrained(const ConstrainedFamily& f) {
    const ModelParams p = expand_family(f);
    const double b1 = f.beta1, s1 = f.s1;
    const double qa = b1 * b1;
    const double qb = -2.0 * s1 * b1;
    const double qc = 2.0 * f.alpha2 * b1 - b1 * s1 - 1.0;
    const double delta = discriminant(f);

    std::vector<Equilibrium> out;
    if (std::abs(delta) < 1e-10 * (4.0 * s1 * s1 * b1 * b1)) {
        out.push_back(family_point(f, p, EqLabel::E5, s1 / b1));
        return out;
    }
    if (delta < 0.0)
        return out;

    // stable quadratic formula
    const double sq = std::sqrt(delta) / 2.0;  // = sqrt(qb^2 - 4 qa qc)/2
    const double q = -(qb + (qb >= 0.0 ? sq * 2.0 : -sq * 2.0)) / 2.0;
    double r1 = q / qa;
    double r2 = qc / q;
    if (r1 > r2) std::swap(r1, r2);
    if (r1 > 0.0) out.push_back(family_point(f, p, EqLabel::E6, r1));
    if (r2 > 0.0) out.push_back(family_point(f, p, r1 > 0.0 ? EqLabel::E7 : EqLabel::E6, r2));
    return out;
}

namespace {

struct ResidualFn {
    const ModelParams& p;

    double y1(double x) const { return (p.alpha2 * x - p.s2) / p.beta2; }
    double y2(double x) const {
        return (p.alpha1 * x / (1.0 + p.theta * x) - p.s1) / p.beta1;
    }
    double operator()(double x) const {
        return (1.0 - x) * (x - p.m) - y1(x) / (1.0 + p.theta * x) - y2(x);
    }
    double deriv(double x) const {
        const double d = 1.0 + p.theta * x;
        return 1.0 + p.m - 2.0 * x
             - (p.alpha2 + p.theta * p.s2) / (p.beta2 * d * d)
             - p.alpha1 / (p.beta1 * d * d);
    }
};

}  // namespace

std::vector<Equilibrium> internal_equilibria_general(const ModelParams& p, double x_max) {
    validate(p);
    if (!(x_max > 0.0))
        throw InvalidRange("x_max must be positive");

    const ResidualFn g{p};
    constexpr int kGrid = 10000;
    std::vector<double> roots;

    auto push_root = [&](double x) {
        for (double r : roots)
            if (std::abs(r - x) < 1e-9 * std::max(1.0, x_max)) return;
        roots.push_back(x);
    };

    // Tangent (double) roots never change sign; catch them by locating
    // extrema of g (sign change of g') and accepting |g| below the polish
    // target there.
    auto try_extremum = [&](double lo, double hi) {
        for (int it = 0; it < 100 && hi - lo > 1e-15; ++it) {
            const double mid = 0.5 * (lo + hi);
            (g.deriv(lo) * g.deriv(mid) <= 0.0 ? hi : lo) = mid;
        }
        const double xe = 0.5 * (lo + hi);
        if (std::abs(g(xe)) < 1e-12) push_root(xe);
    };

    double x_prev = x_max / kGrid;
    double g_prev = g(x_prev);
    double d_prev = g.deriv(x_prev);
    for (int i = 2; i <= kGrid; ++i) {
        const double x = x_max * i / kGrid;
        const double gx = g(x);
        const double dx = g.deriv(x);
        if (d_prev * dx < 0.0) try_extremum(x_prev, x);
        d_prev = dx;
        if (g_prev == 0.0) push_root(x_prev);
        if (g_prev * gx < 0.0) {
            double lo = x_prev, hi = x;
            for (int it = 0; it < 100 && hi - lo > 1e-15; ++it) {
                const double mid = 0.5 * (lo + hi);
                (g(lo) * g(mid) <= 0.0 ? hi : lo) = mid;
            }
            double r = 0.5 * (lo + hi);
            for (int it = 0; it < 20 && std::abs(g(r)) > 1e-12; ++it) {
                const double d = g.deriv(r);
                if (d == 0.0) break;
                const double next = r - g(r) / d;
                if (!(next > lo - (hi - lo) && next < hi + (hi - lo))) break;
                r = next;
            }
            push_root(r);
        }
        x_prev = x;
        g_prev = gx;
    }
    if (g_prev == 0.0) push_root(x_prev);

    std::sort(roots.begin(), roots.end());
    std::vector<Equilibrium> out;
    for (double x : roots) {
        const State pt{x, g.y1(x), g.y2(x)};
        const bool pos1 = pt.y1 >= 0.0;
        const bool pos2 = pt.y2 >= 0.0;
        out.push_back({EqLabel::Generic, pt, x > 0.0 && pos1 && pos2,
                       {{"y1 >= 0", pos1},
                        {"y2 >= 0", pos2},
                        {"vector_field_residual_ok", residual_ok(p, pt)}}});
    }
    return out;
}

}  // namespace alleedyn
