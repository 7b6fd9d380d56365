#pragma once

#include <vector>

#include "polyrec/rational.hpp"

namespace polyrec {

// Exact feasibility of { A x = b, x >= 0 } by phase-1 simplex (Bland's rule).
bool lp_feasible_eq_nonneg(const std::vector<RatVec>& A, const RatVec& b);

// Feasibility of { a.x <= b for (a,b) in ineqs, a.x = b for (a,b) in eqs }
// with free variables.
struct LinSys {
    int nvars = 0;
    std::vector<std::pair<RatVec, Rat>> ineqs;
    std::vector<std::pair<RatVec, Rat>> eqs;
};
bool lp_feasible(const LinSys& sys);

// p in conv(pts), decided exactly.
bool in_convex_hull(const RatVec& p, const std::vector<RatVec>& pts);

}  // namespace polyrec
