#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "alleedyn/equilibria.hpp"
#include "alleedyn/model.hpp"

namespace alleedyn {

/// Coefficients of lambda^3 + a2 lambda^2 + a1 lambda + a0.
struct CharCubic {
    double a2;
    double a1;
    double a0;
};

CharCubic char_cubic(const Mat3& J);

/// All three roots of the cubic, trigonometric/Cardano method with one
/// Newton polish step per root. Roots with |Im| < zero_tol * scale are
/// snapped to the real axis. Sorted by real part ascending (then imag).
std::array<std::complex<double>, 3> eigenvalues(const CharCubic& c, double zero_tol);

enum class Classification {
    StableNode,
    UnstableNode,
    Saddle,
    SaddleNodeCodim1,
    SingleZeroDegenerate,
    FoldHopfCandidate,
    DoubleZeroCandidate,
    StableFocusNode,
    UnstableFocusNode,
    Unclassified,
};

const char* to_string(Classification c);

struct SpectrumReport {
    std::array<std::complex<double>, 3> eigenvalues;
    Classification classification;
    double zero_tol;
    CharCubic cubic;
    std::vector<Condition> conditions;  ///< tabulated stability-condition evaluations
    /// Set when the tabulated verdict disagrees with the eigenvalue signs.
    std::optional<std::string> condition_discrepancy;
};

/// Classifies an equilibrium from the spectrum of the Jacobian.
/// Throws NotAnEquilibrium when the vector-field residual at e.point
/// exceeds 1e-8 * max(1, |point|).
SpectrumReport classify(const ModelParams& p, const Equilibrium& e);

enum class SaddleNodeSource { E3_case_v, E4_case_iii };

struct SaddleNodeCoeff {
    double g200;
    SaddleNodeSource source;
};

/// Closed-form quadratic center-manifold coefficient at the saddle-node:
/// E3 -> g200 = alpha2; E4 -> g200 = alpha1/(1+theta x4)^2.
/// Throws ConditionNotMet unless the corresponding eigenvalue is zero
/// within tolerance.
SaddleNodeCoeff saddle_node_coefficient(const ModelParams& p, SaddleNodeSource which);

/// The interior evaluation point (s1/b1, s1(a2-b1)/b1^2, s1(a2-s1-b1)/(b1(b1+s1))).
State e5_point(double s1, double beta1, double alpha2);

/// Closed-form alpha1 making det J(E5) vanish. Throws SingularDenominator
/// when beta1 (2 beta1 alpha2 - beta1^2 + s1 alpha2) == 0.
double alpha1_star(double s1, double beta1, double alpha2);

/// Roots (lo < hi) of the window polynomial f(alpha2); alpha1_star > 0 on
/// (lo, hi). Throws Error("NegativeWindowDiscriminant") if the quadratic
/// has no real roots, InvalidRange unless 0 < s1 < beta1/2.
std::pair<double, double> alpha2_star_window(double s1, double beta1);

enum class DegeneracyKind { SingleZero, FoldHopf, DoubleZero, NonDegenerate };

const char* to_string(DegeneracyKind k);

/// Pattern of the characteristic cubic at E5 under the family constraints.
DegeneracyKind degenerate_structure(double s1, double beta1, double alpha2, double alpha1);

/// Outcome of a degenerate-locus solve; found == false carries a reason
/// ("NoSignChange", "ImaginaryPairAbsent", "TripleZero").
struct DegenerateSolve {
    bool found;
    double alpha2;
    std::string reason;
};

/// Finds alpha2 in the window with alpha1 = alpha1_star(alpha2) such that
/// the lambda^2-coefficient at E5 vanishes (bisection to 1e-12) and the
/// remaining lambda-coefficient is positive: spectrum {0, +-i omega}.
DegenerateSolve solve_fold_hopf(double s1, double beta1);

/// Same but zeroing the lambda-coefficient; requires a nonzero
/// lambda^2-coefficient: spectrum {0, 0, lambda3 != 0}.
DegenerateSolve solve_double_zero(double s1, double beta1);

}  // namespace alleedyn
