#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "polyrec/laurent.hpp"
#include "polyrec/polytope.hpp"

namespace polyrec {

// sigma_P(x) = sum of x^m over the lattice points of P; 0 for the empty
// polytope.
Laurent integer_point_transform(const Polytope& P);

// Coefficients of prod_{v in V(P)} (X - x^v), degree-descending:
// coeffs[j] = (-1)^j e_j({x^v}). Requires a lattice polytope.
std::vector<Laurent> char_poly(const Polytope& P);

// sigma_{kP+Q} for k = 0..count-1.
std::vector<Laurent> transform_sequence(const Polytope& P, const Polytope& Q, int count);

/// Certificate of a verified vertex recursion: the characteristic polynomial
/// used, the k-range checked, and (when computed) the per-dropped-vertex
/// minimality residuals.
struct RecursionCertificate {
    bool holds = false;
    std::vector<Laurent> char_poly_coeffs;
    int k_min = 0;
    int k_max = 0;
    int failed_k = -1;
    Laurent defect;
    bool minimality_computed = false;
    bool minimal = false;
    std::vector<std::pair<Expo, Laurent>> minimality_residuals;  // vertex -> residual at k_min
};

RecursionCertificate verify_recursion(const Polytope& P, const Polytope& Q, int k_max);

// Residual of the corank-1 recursion that drops vertex u, evaluated at k=0.
// Residuals are recomputed for k = 0..r as a consistency check; any
// disagreement in (non)vanishing aborts.
std::vector<std::pair<Expo, Laurent>> minimality_residuals(const Polytope& P,
                                                           const Polytope& Q);

RecursionCertificate verify_with_minimality(const Polytope& P, const Polytope& Q, int k_max);

struct IndicatorCheckResult {
    bool ok = true;
    RatVec point;  // first mismatching sample point, if any
    long long lhs = 0;
    long long rhs = 0;
    long long samples = 0;
};

// Pointwise check of the dilation recursion on indicator functions over a
// half-integer grid refining `box`.
IndicatorCheckResult indicator_recursion_check(const Polytope& P, int k, const IntBox& box);
IntBox default_indicator_box(const Polytope& P, int k);

/// Integer matrix of a lattice-preserving linear map Z^cols -> Z^rows.
struct LatticeMap {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<int64_t>> m;

    static LatticeMap identity(int n);
    static LatticeMap zero_map(int cols) { return LatticeMap{0, cols, {}}; }
    Expo apply(const Expo& e) const;
};

// Algebra homomorphism x^m -> x^{f(m)}; colliding images accumulate.
Laurent specialize(const Laurent& p, const LatticeMap& f);

std::vector<long long> ehrhart_sequence(const Polytope& P, int k_max);

// Does the `order`-th finite difference of seq vanish on the available window?
bool differences_vanish(const std::vector<long long>& seq, int order);
// Smallest order whose difference vanishes on the window; -1 if none does.
int min_vanishing_difference_order(const std::vector<long long>& seq);

}  // namespace polyrec
