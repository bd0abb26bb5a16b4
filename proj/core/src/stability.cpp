#include "alleedyn/stability.hpp"

#include <algorithm>
#include <cmath>

namespace alleedyn {

const char* to_string(Classification c) {
    switch (c) {
        case Classification::StableNode: return "StableNode";
        case Classification::UnstableNode: return "UnstableNode";
        case Classification::Saddle: return "Saddle";
        case Classification::SaddleNodeCodim1: return "SaddleNodeCodim1";
        case Classification::SingleZeroDegenerate: return "SingleZeroDegenerate";
        case Classification::FoldHopfCandidate: return "FoldHopfCandidate";
        case Classification::DoubleZeroCandidate: return "DoubleZeroCandidate";
        case Classification::StableFocusNode: return "StableFocusNode";
        case Classification::UnstableFocusNode: return "UnstableFocusNode";
        case Classification::Unclassified: return "Unclassified";
    }
    return "?";
}

const char* to_string(DegeneracyKind k) {
    switch (k) {
        case DegeneracyKind::SingleZero: return "SingleZero";
        case DegeneracyKind::FoldHopf: return "FoldHopf";
        case DegeneracyKind::DoubleZero: return "DoubleZero";
        case DegeneracyKind::NonDegenerate: return "NonDegenerate";
    }
    return "?";
}

CharCubic char_cubic(const Mat3& J) {
    return CharCubic{-J.trace(), J.minor_sum(), -J.det()};
}

namespace {

std::complex<double> cubic_newton(const CharCubic& c, std::complex<double> z) {
    // One Newton step on lambda^3 + a2 lambda^2 + a1 lambda + a0.
    const std::complex<double> f = ((z + c.a2) * z + c.a1) * z + c.a0;
    const std::complex<double> df = (3.0 * z + 2.0 * c.a2) * z + c.a1;
    if (std::abs(df) == 0.0) return z;
    return z - f / df;
}

}  // namespace

std::array<std::complex<double>, 3> eigenvalues(const CharCubic& c, double zero_tol) {
    const double a2 = c.a2, a1 = c.a1, a0 = c.a0;
    // depressed cubic t^3 + p t + q, lambda = t - a2/3
    const double shift = a2 / 3.0;
    const double p = a1 - a2 * a2 / 3.0;
    const double q = 2.0 * a2 * a2 * a2 / 27.0 - a2 * a1 / 3.0 + a0;
    const double disc = 0.25 * q * q + p * p * p / 27.0;

    std::array<std::complex<double>, 3> roots;
    if (disc > 0.0) {
        // one real root, one complex pair (Cardano)
        const double sq = std::sqrt(disc);
        const double u = std::cbrt(-0.5 * q + sq);
        const double v = std::cbrt(-0.5 * q - sq);
        const double tr = u + v;
        roots[0] = tr;
        const double re = -0.5 * tr;
        const double im = 0.5 * std::sqrt(3.0) * (u - v);
        roots[1] = {re, im};
        roots[2] = {re, -im};
    } else {
        // three real roots (trigonometric form)
        const double r = std::sqrt(std::max(0.0, -p / 3.0));
        if (r == 0.0) {
            roots.fill(std::cbrt(-q));
        } else {
            const double cphi = std::clamp(-0.5 * q / (r * r * r), -1.0, 1.0);
            const double phi = std::acos(cphi);
            for (int k = 0; k < 3; ++k)
                roots[k] = 2.0 * r * std::cos((phi - 2.0 * M_PI * k) / 3.0);
        }
    }

    double scale = 1.0;
    for (auto& z : roots) {
        z -= shift;
        z = cubic_newton(c, z);
        scale = std::max(scale, std::abs(z));
    }
    for (auto& z : roots)
        if (std::abs(z.imag()) < zero_tol * scale) z = {z.real(), 0.0};

    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return roots;
}

namespace {

struct ConditionTable {
    std::vector<Condition> conditions;
    // the tabulated verdict for the parameter region, when one applies
    enum class Label { None, Stable, Unstable, Saddle, SaddleNode } statement = Label::None;
};

ConditionTable stated_conditions(const ModelParams& p, const Equilibrium& e) {
    using L = ConditionTable::Label;
    ConditionTable t;
    switch (e.label) {
        case EqLabel::E1: {
            const bool c1 = p.alpha1 / (1.0 + p.theta) < p.s1;
            const bool c2 = p.alpha2 < p.s2;
            t.conditions = {{"alpha1/(1+theta) < s1", c1}, {"alpha2 < s2", c2}};
            if (c1 && c2) t.statement = L::Stable;
            else if (!c1 || !c2) t.statement = L::Saddle;
            break;
        }
        case EqLabel::E2: {
            const bool c1 = p.alpha1 * p.m / (1.0 + p.theta * p.m) > p.s1;
            const bool c2 = p.alpha2 * p.m > p.s2;
            t.conditions = {{"alpha1*m/(1+theta*m) > s1", c1}, {"alpha2*m > s2", c2}};
            t.statement = (c1 && c2) ? L::Unstable : L::Saddle;
            break;
        }
        case EqLabel::E3: {
            const double y2s = (p.alpha2 - p.s2) * (p.s2 - p.m * p.alpha2)
                             / (p.alpha2 * p.alpha2);
            const double thr = p.alpha1 * p.s2 / (p.alpha2 + p.theta * p.s2)
                             - p.beta1 * y2s;
            const bool c1 = p.s1 > thr;
            const bool c2 = p.s2 > (p.m + 1.0) * p.alpha2 / 4.0;
            t.conditions = {{"s1 > alpha1*s2/(alpha2+theta*s2) - beta1*y2*", c1},
                            {"s2 > (m+1)*alpha2/4", c2}};
            if (p.s1 == thr) t.statement = L::SaddleNode;
            else if (c1 && c2) t.statement = L::Stable;
            else if (c1 || c2) t.statement = L::Saddle;
            else t.statement = L::Stable;  // case (iv) statement; proof concludes unstable
            break;
        }
        case EqLabel::E4: {
            const double den = p.alpha1 - p.theta * p.s1;
            const double a = p.alpha1 - p.theta * p.s1 - p.s1;
            const double b = p.s1 - p.m * p.alpha1 + p.m * p.theta * p.s1;
            const double thr = (p.alpha2 * p.s1 - p.alpha1 * p.beta2 * a * b) / den;
            const bool c1 = p.s2 > thr;
            const bool c2 = p.alpha1 > p.s1 * (2.0 * p.m + p.m * p.theta + 1.0) / p.m;
            t.conditions = {{"s2 > (alpha2*s1 - alpha1*beta2*A*B)/(alpha1-theta*s1)", c1},
                            {"alpha1 > s1*(2m+m*theta+1)/m", c2}};
            if (p.s2 == thr) t.statement = L::SaddleNode;
            else t.statement = L::Stable;  // cases (i) and (ii) both claim stable
            break;
        }
        default:
            break;
    }
    return t;
}

bool compatible(ConditionTable::Label s, Classification c) {
    using L = ConditionTable::Label;
    switch (s) {
        case L::None: return true;
        case L::Stable:
            return c == Classification::StableNode || c == Classification::StableFocusNode;
        case L::Unstable:
            return c == Classification::UnstableNode || c == Classification::UnstableFocusNode;
        case L::Saddle: return c == Classification::Saddle;
        case L::SaddleNode:
            return c == Classification::SaddleNodeCodim1
                || c == Classification::SingleZeroDegenerate;
    }
    return true;
}

const char* statement_name(ConditionTable::Label s) {
    using L = ConditionTable::Label;
    switch (s) {
        case L::Stable: return "stable node";
        case L::Unstable: return "unstable node";
        case L::Saddle: return "saddle";
        case L::SaddleNode: return "saddle-node";
        default: return "none";
    }
}

}  // namespace

SpectrumReport classify(const ModelParams& p, const Equilibrium& e) {
    validate(p);
    if (!std::isfinite(e.point.x) || !std::isfinite(e.point.y1) || !std::isfinite(e.point.y2))
        throw NotAnEquilibrium("equilibrium point is undefined");
    const double scale = std::max(1.0, inf_norm(e.point));
    if (inf_norm(vector_field(p, e.point)) > 1e-8 * scale)
        throw NotAnEquilibrium("vector-field residual exceeds tolerance at the given point");

    const Mat3 J = jacobian(p, e.point);
    const CharCubic cubic = char_cubic(J);
    const auto eig = eigenvalues(cubic, 1e-8);

    double specrad = 0.0;
    for (const auto& z : eig) specrad = std::max(specrad, std::abs(z));
    const double tol = 1e-8 * std::max(1.0, specrad);

    int zeros = 0;
    int complex_pairs = 0;
    int neg = 0, pos = 0;
    for (const auto& z : eig) {
        if (std::abs(z) < tol) { ++zeros; continue; }
        if (z.imag() > 0.0) ++complex_pairs;
        if (z.real() < -tol) ++neg;
        else if (z.real() > tol) ++pos;
    }

    Classification cls = Classification::Unclassified;
    if (zeros == 0) {
        if (neg == 3) cls = complex_pairs ? Classification::StableFocusNode
                                          : Classification::StableNode;
        else if (pos == 3) cls = complex_pairs ? Classification::UnstableFocusNode
                                               : Classification::UnstableNode;
        else if (neg + pos == 3) cls = Classification::Saddle;
    } else if (zeros == 1) {
        bool pure_imag_pair = true;
        for (const auto& z : eig) {
            if (std::abs(z) < tol) continue;
            if (std::abs(z.real()) >= tol || std::abs(z.imag()) < tol) pure_imag_pair = false;
        }
        if (pure_imag_pair) {
            cls = Classification::FoldHopfCandidate;
        } else if (e.label == EqLabel::E3 || e.label == EqLabel::E4) {
            // a closed-form fold coefficient exists and is positive for these points
            cls = Classification::SaddleNodeCodim1;
        } else {
            cls = Classification::SingleZeroDegenerate;
        }
    } else if (zeros == 2) {
        cls = Classification::DoubleZeroCandidate;
    }

    auto table = stated_conditions(p, e);
    SpectrumReport rep{eig, cls, tol, cubic, std::move(table.conditions), std::nullopt};
    if (!compatible(table.statement, cls)) {
        rep.condition_discrepancy = std::string("condition table says '")
            + statement_name(table.statement)
            + "' but eigenvalue signs give " + to_string(cls);
    }
    return rep;
}

SaddleNodeCoeff saddle_node_coefficient(const ModelParams& p, SaddleNodeSource which) {
    validate(p);
    if (which == SaddleNodeSource::E3_case_v) {
        const double x3 = p.s2 / p.alpha2;
        const double y2s = (p.alpha2 - p.s2) * (p.s2 - p.m * p.alpha2)
                         / (p.alpha2 * p.alpha2);
        const double lambda1 = -p.s1 + p.alpha1 * x3 / (1.0 + p.theta * x3)
                             - p.beta1 * y2s;
        if (std::abs(lambda1) > 1e-8)
            throw ConditionNotMet("lambda1 at E3 is not zero within tolerance");
        return SaddleNodeCoeff{p.alpha2, which};
    }
    const double den = p.alpha1 - p.theta * p.s1;
    if (den == 0.0)
        throw ConditionNotMet("E4 undefined: alpha1 == theta*s1");
    const double x4 = p.s1 / den;
    const double a = p.alpha1 - p.theta * p.s1 - p.s1;
    const double b = p.s1 - p.m * p.alpha1 + p.m * p.theta * p.s1;
    const double y1s = p.alpha1 * a * b / (den * den * den);
    const double lambda1 = -p.s2 + p.alpha2 * x4 - p.beta2 * y1s;
    if (std::abs(lambda1) > 1e-8)
        throw ConditionNotMet("lambda1 at E4 is not zero within tolerance");
    const double d = 1.0 + p.theta * x4;
    return SaddleNodeCoeff{p.alpha1 / (d * d), which};
}

State e5_point(double s1, double beta1, double alpha2) {
    return State{s1 / beta1,
                 s1 * (alpha2 - beta1) / (beta1 * beta1),
                 s1 * (alpha2 - s1 - beta1) / (beta1 * (beta1 + s1))};
}

double alpha1_star(double s1, double beta1, double alpha2) {
    const double b = beta1, s = s1, a = alpha2;
    const double den = b * (2.0 * b * a - b * b + s * a);
    if (den == 0.0)
        throw SingularDenominator("beta1*(2 beta1 alpha2 - beta1^2 + s1 alpha2) == 0");
    const double num = 5.0 * s * b * b * a + 3.0 * s * s * b * a + s * s * s * a
                     + 5.0 * b * b * b * a - 2.0 * b * b * a * a - s * b * a * a
                     - 3.0 * s * b * b * b - 3.0 * s * s * b * b - s * s * s * b
                     - 2.0 * b * b * b * b;
    return num / den;
}

std::pair<double, double> alpha2_star_window(double s1, double beta1) {
    if (!(s1 > 0.0) || !(s1 < beta1 / 2.0))
        throw InvalidRange("window requires 0 < s1 < beta1/2");
    const double b = beta1, s = s1;
    const double qa = -(2.0 * b * b + s * b);
    const double qb = 5.0 * s * b * b + 3.0 * s * s * b + s * s * s + 5.0 * b * b * b;
    const double qc = -(3.0 * s * b * b * b + 3.0 * s * s * b * b + s * s * s * b
                        + 2.0 * b * b * b * b);
    const double disc = qb * qb - 4.0 * qa * qc;
    if (!(disc > 0.0))
        throw Error("NegativeWindowDiscriminant");
    const double sq = std::sqrt(disc);
    const double q = -(qb + (qb >= 0.0 ? sq : -sq)) / 2.0;
    double lo = q / qa, hi = qc / q;
    if (lo > hi) std::swap(lo, hi);
    return {lo, hi};
}

namespace {

// characteristic-cubic coefficients at E5 with the family constraints
CharCubic e5_cubic(double s1, double beta1, double alpha2, double alpha1) {
    const ModelParams p = expand_family(ConstrainedFamily{s1, beta1, alpha1, alpha2});
    return char_cubic(jacobian(p, e5_point(s1, beta1, alpha2)));
}

double jac_scale(double s1, double beta1, double alpha2, double alpha1) {
    const ModelParams p = expand_family(ConstrainedFamily{s1, beta1, alpha1, alpha2});
    const Mat3 J = jacobian(p, e5_point(s1, beta1, alpha2));
    double m = 1.0;
    for (double v : J.a) m = std::max(m, std::abs(v));
    return m;
}

DegenerateSolve solve_degenerate(double s1, double beta1, bool zero_lambda_coeff) {
    auto [lo, hi] = alpha2_star_window(s1, beta1);
    const double margin = 1e-9 * (hi - lo);
    lo += margin;
    hi -= margin;

    auto target = [&](double a2) {
        const CharCubic c = e5_cubic(s1, beta1, a2, alpha1_star(s1, beta1, a2));
        return zero_lambda_coeff ? c.a1 : c.a2;
    };

    constexpr int kGrid = 400;
    bool any_sign_change = false;
    double x_prev = lo, g_prev = target(lo);
    for (int i = 1; i <= kGrid; ++i) {
        const double x = lo + (hi - lo) * i / kGrid;
        const double gx = target(x);
        if (g_prev * gx < 0.0) {
            any_sign_change = true;
            double a = x_prev, b = x;
            // bisect to machine resolution: the coefficient pattern at the
            // root must come out well below the classification tolerances
            for (int it = 0; it < 80; ++it) {
                const double mid = 0.5 * (a + b);
                if (mid == a || mid == b) break;
                (target(a) * target(mid) <= 0.0 ? b : a) = mid;
            }
            const double root = 0.5 * (a + b);
            const double a1s = alpha1_star(s1, beta1, root);
            const CharCubic c = e5_cubic(s1, beta1, root, a1s);
            const double m = jac_scale(s1, beta1, root, a1s);
            if (zero_lambda_coeff) {
                if (std::abs(c.a2) > 1e-8 * m)
                    return {true, root, ""};
                // fall through: also a2 ~ 0 here, keep scanning
                if (i == kGrid) return {false, 0.0, "TripleZero"};
            } else {
                if (c.a1 > 1e-8 * m * m)
                    return {true, root, ""};
            }
        }
        x_prev = x;
        g_prev = gx;
    }
    if (any_sign_change)
        return {false, 0.0, zero_lambda_coeff ? "TripleZero" : "ImaginaryPairAbsent"};
    return {false, 0.0, "NoSignChange"};
}

}  // namespace

DegeneracyKind degenerate_structure(double s1, double beta1, double alpha2, double alpha1) {
    const CharCubic c = e5_cubic(s1, beta1, alpha2, alpha1);
    const double m = jac_scale(s1, beta1, alpha2, alpha1);
    const double t0 = 1e-8 * m * m * m;
    const double t1 = 1e-8 * m * m;
    const double t2 = 1e-8 * m;
    const bool z0 = std::abs(c.a0) < t0;
    const bool z1 = std::abs(c.a1) < t1;
    const bool z2 = std::abs(c.a2) < t2;
    if (z0 && !z1 && !z2) return DegeneracyKind::SingleZero;
    if (z0 && z2 && c.a1 > t1) return DegeneracyKind::FoldHopf;
    if (z0 && z1 && !z2) return DegeneracyKind::DoubleZero;
    return DegeneracyKind::NonDegenerate;
}

DegenerateSolve solve_fold_hopf(double s1, double beta1) {
    return solve_degenerate(s1, beta1, /*zero_lambda_coeff=*/false);
}

DegenerateSolve solve_double_zero(double s1, double beta1) {
    return solve_degenerate(s1, beta1, /*zero_lambda_coeff=*/true);
}

}  // namespace alleedyn
