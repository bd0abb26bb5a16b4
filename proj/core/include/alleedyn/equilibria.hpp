#pragma once

#include <string>
#include <vector>

#include "alleedyn/model.hpp"

namespace alleedyn {

enum class EqLabel { E1, E2, E3, E4, E5, E6, E7, Generic };

const char* to_string(EqLabel label);

/// A named existence/feasibility predicate and its evaluation.
struct Condition {
    std::string name;
    bool holds;
};

struct Equilibrium {
    EqLabel label;
    State point;
    bool feasible;  ///< all coordinates >= 0 and existence conditions hold
    std::vector<Condition> existence_conditions;
};

/// The four boundary equilibria. Infeasible points are returned with
/// feasible=false; when alpha1 == theta*s1 the E4 entry has a NaN point
/// and the failed denominator condition recorded.
std::vector<Equilibrium> boundary_equilibria(const ModelParams& p);

/// Parameter family beta1 == beta2, theta == 1, s1 == s2, m == 2 s1/beta1.
struct ConstrainedFamily {
    double s1;
    double beta1;
    double alpha1;
    double alpha2;
};

/// Throws AlleeOutOfRange unless 0 < s1 < beta1/2, NonPositiveParam otherwise.
void validate(const ConstrainedFamily& f);

/// Expands the family into full ModelParams.
ModelParams expand_family(const ConstrainedFamily& f);

/// Discriminant of the family's quadratic in x:
/// beta1^2 x^2 - 2 s1 beta1 x + (2 alpha2 beta1 - beta1 s1 - 1) = 0.
double discriminant(const ConstrainedFamily& f);

/// Internal equilibrium candidates from the quadratic above (0, 1 or 2).
/// A discriminant within 1e-10 * (4 s1^2 beta1^2) of zero counts as the
/// double-root case (single E5 at x = s1/beta1). Non-positive roots are
/// dropped. feasible = coordinate positivity; a separate condition
/// records whether the vector-field residual actually vanishes.
std::vector<Equilibrium> internal_equilibria_constrained(const ConstrainedFamily& f);

/// Internal equilibria of the full system: substitutes
/// y1(x) = (alpha2 x - s2)/beta2 and y2(x) = (alpha1 x/(1+theta x) - s1)/beta1
/// into the prey equation and finds all roots of the residual on (0, x_max]
/// by sign-change bracketing on a 1e4-point grid plus bisection and Newton
/// polish to |g| < 1e-12.
std::vector<Equilibrium> internal_equilibria_general(const ModelParams& p, double x_max = 1.0);

}  // namespace alleedyn
