#ifndef GMAK_LINPROG_HPP
#define GMAK_LINPROG_HPP

#include <optional>
#include <vector>

#include "gmak/rational.hpp"

namespace gmak {

// Exact rational linear programming over free variables, just big enough for
// sign-vector realizability and strict-positivity tests. No tolerances: a
// system is feasible or it is not.

enum class Rel { eq, ge, le };

struct LinearConstraint {
    std::vector<Rational> a;
    Rel rel = Rel::eq;
    Rational b = 0;
};

// Some point satisfying all constraints, or nullopt if none exists.
std::optional<std::vector<Rational>> lp_feasible_point(int nvars, const std::vector<LinearConstraint>& cons);

// Minimizer of cost . x over the constraints (Bland's rule, deterministic).
// nullopt if infeasible; throws std::runtime_error if unbounded below.
std::optional<std::vector<Rational>> lp_minimize(int nvars, const std::vector<Rational>& cost,
                                                 const std::vector<LinearConstraint>& cons);

}  // namespace gmak

#endif
