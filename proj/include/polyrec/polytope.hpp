#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "polyrec/laurent.hpp"
#include "polyrec/rational.hpp"

namespace polyrec {

/// Canonical vertex description: every stored point is extreme, points are
/// sorted lexicographically.
struct VRep {
    std::vector<RatVec> points;
    bool operator==(const VRep& o) const { return points == o.points; }
};

/// One facet/hyperplane row a.x <= b (or a.x = b), stored as a primitive
/// integer vector so comparisons are canonical.
struct HRow {
    std::vector<Int> a;
    Int b;
    bool operator==(const HRow& o) const { return a == o.a && b == o.b; }
    bool operator<(const HRow& o) const { return a < o.a || (a == o.a && b < o.b); }
};

Rat hrow_eval(const HRow& row, const RatVec& x);

struct HRep {
    std::vector<HRow> ineqs;  // a.x <= b
    std::vector<HRow> eqs;    // a.x = b
};

using IntBox = std::vector<std::pair<long long, long long>>;

/// Rational polytope carrying a vertex list and an inequality description.
/// Either side may be supplied at construction; the other is derived on
/// first use (once, under a guard, so shared copies stay consistent).
/// Immutable after construction.
class Polytope {
public:
    Polytope() : Polytope(empty(0)) {}

    // Canonicalizes: redundant input points are removed exactly.
    static Polytope from_points(int ambient_dim, std::vector<RatVec> pts);
    // Points already known to be the vertex set (e.g. an affine image of one).
    static Polytope from_vertices(int ambient_dim, std::vector<RatVec> verts,
                                  std::optional<HRep> hrep = std::nullopt);
    static Polytope from_hrep(int ambient_dim, HRep h,
                              std::optional<IntBox> lattice_box_hint = std::nullopt);
    static Polytope empty(int ambient_dim);
    static Polytope single_point(RatVec p);

    int ambient_dim() const;
    bool is_empty() const;
    int dim() const;  // affine dimension; -1 for the empty polytope

    const VRep& vrep() const;
    const HRep& hrep() const;

    bool contains(const RatVec& x) const;
    bool is_lattice() const;
    // Vertices as integer vectors; throws if some vertex is not integral.
    std::vector<Expo> integer_vertices() const;

    std::optional<IntBox> box_hint() const;

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
    explicit Polytope(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
};

// a.x <= b normalized to a primitive integer row; returns nullopt for an
// all-zero normal (caller decides what a trivial row means).
std::optional<HRow> normalize_row(const RatVec& a, const Rat& b);

VRep canonicalize_vertices(int ambient_dim, const std::vector<RatVec>& points);

// Fourier-Motzkin elimination of the barycentric coordinates of
// { x = sum lambda_i v_i, sum lambda_i = 1, lambda >= 0 }, with interleaved
// redundancy pruning; result is irredundant (facets + affine hull).
HRep v_to_h(int ambient_dim, const VRep& v);

// Exhaustive basis search: every dim-sized subset of constraints is solved
// exactly and feasibility-checked. Throws on unbounded or infeasible input.
VRep vertex_enumeration(int ambient_dim, const HRep& h);

Polytope dilate(const Polytope& P, long long k);
Polytope translate(const Polytope& P, const RatVec& v);
Polytope minkowski_sum(const Polytope& P, const Polytope& Q);

// All integer points of P in graded-lex order.
std::vector<Expo> lattice_points(const Polytope& P);

IntBox bounding_box(const Polytope& P);

int affine_rank(const std::vector<RatVec>& points);

}  // namespace polyrec
