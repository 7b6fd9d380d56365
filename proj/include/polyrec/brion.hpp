#pragma once

#include <vector>

#include "polyrec/laurent.hpp"
#include "polyrec/polytope.hpp"

namespace polyrec {

/// Pointed cone with an integer apex and primitive, pairwise distinct
/// integer generators.
struct PointedCone {
    Expo apex;
    std::vector<Expo> generators;
};

/// Generating function N / prod_g (1 - x^g) of a simplicial cone.
struct RationalFn {
    Laurent numerator;
    std::vector<Expo> denominator_factors;
};

// prod_g (1 - x^g) expanded.
Laurent denominator_product(const std::vector<Expo>& gens, int dim);

// Cross-multiplied equality of two rational functions in the restricted
// denominator form.
bool rational_fn_equal(const RationalFn& f, const RationalFn& g);

// Cone of feasible directions at vertex v, translated to v; generators are
// the primitive edge directions at v. Requires a lattice polytope.
PointedCone tangent_cone(const Polytope& P, const Expo& v);

// Generating function via the half-open fundamental parallelepiped
// { sum lambda_i g_i : 0 <= lambda_i < 1 }. Requires linearly independent
// generators and a pointed cone.
RationalFn cone_transform(const PointedCone& c);

// Lattice points of the half-open parallelepiped of the generators.
std::vector<Expo> parallelepiped_points(const std::vector<Expo>& gens, int dim);

struct BrionVertexTerm {
    Expo vertex;
    RationalFn fn;
};

struct BrionReport {
    bool verified = false;
    std::vector<BrionVertexTerm> terms;
    Laurent lhs;  // sigma_P * prod_v D_v
    Laurent rhs;  // sum_v N_v * prod_{w != v} D_w
};

// Verifies Brion's identity with denominators cleared, as an exact Laurent
// polynomial equality. All vertex cones must be simplicial.
BrionReport brion_check(const Polytope& P);

}  // namespace polyrec
