#pragma once

#include <vector>

#include "icl/poly/field.hpp"

namespace icl::lp {

/* a.x + b > 0 (strict) or a.x + b >= 0. */
struct Inequality {
    std::vector<Rational> a;
    Rational b;
    bool strict = false;
};

/* Exact feasibility of a mixed strict/non-strict system by Fourier-Motzkin
 * elimination over all variables. */
bool fourier_motzkin_feasible(std::vector<Inequality> system, std::size_t nvars);

/* Exact feasibility of {x >= 0 : A x = b} by a two-phase-style simplex
 * (phase one only) with Bland's rule. */
bool simplex_feasible(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b);

} // namespace icl::lp
