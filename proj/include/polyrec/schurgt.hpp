#pragma once

#include <string>
#include <vector>

#include "polyrec/laurent.hpp"
#include "polyrec/polytope.hpp"
#include "polyrec/transform.hpp"

namespace polyrec {

/// Weakly decreasing vector of nonnegative integers.
struct Partition {
    std::vector<long long> parts;

    Partition() = default;
    explicit Partition(std::vector<long long> p);

    long long size() const;                   // sum of parts
    int length() const;                       // number of strictly positive parts
    std::vector<long long> padded(int n) const;
    bool contains(const Partition& mu, int n) const;  // mu_i <= lambda_i for all i
};

Partition partition_add(const Partition& a, const Partition& b, long long scale_b, int n);

/// Skew shape lambda/mu with entries bounded by n letters.
struct SkewShape {
    Partition lambda;
    Partition mu;
    int n = 0;

    SkewShape() = default;
    SkewShape(Partition l, Partition m, int letters);

    long long cell_count() const { return lambda.size() - mu.size(); }
};

/// Integer Gelfand-Tsetlin array: n+1 rows of n entries, each row weakly
/// increasing left to right, consecutive rows interlacing
/// (row[i+1][j] <= row[i][j] <= row[i+1][j+1], rows counted from the top).
/// The top row is lambda reversed, the bottom row mu reversed.
struct GTPattern {
    std::vector<std::vector<long long>> rows;

    bool valid() const;
    std::vector<long long> weight() const;  // w_i = sum(row i) - sum(row i+1)
};

using WeightVector = std::vector<long long>;

// The Gelfand-Tsetlin polytope of the shape: H-representation over the free
// entries (rows strictly between the fixed boundary rows), with a lattice
// box hint derived from the column bounds.
Polytope gt_polytope(const SkewShape& shape);

// All integer patterns with the shape's boundary rows, built from the
// lattice points of gt_polytope.
std::vector<GTPattern> gt_patterns(const SkewShape& shape);

// Rebuilds the full (rational) pattern rows from a point of the free space.
std::vector<RatVec> pattern_rows_from_point(const SkewShape& shape, const RatVec& point);
std::vector<Rat> pattern_weight_rational(const std::vector<RatVec>& rows);

using Tableau = std::vector<std::vector<int>>;  // row i: entries of cells mu_i..lambda_i-1

// Independent backtracking enumeration; the oracle for everything GT-based.
std::vector<Tableau> ssyt_enumerate(const SkewShape& shape);
WeightVector tableau_weight(const Tableau& t, int n);

// Schur polynomial via GT lattice points; cross-checked structurally against
// the SSYT enumeration (the two routes are a bijection and must agree).
Laurent schur_polynomial(const SkewShape& shape);
Laurent schur_polynomial_ssyt(const SkewShape& shape);

long long kostka(const SkewShape& shape, const WeightVector& w);

// Domination order on equal-sum vectors: prefix sums of a dominate b's.
bool dominates(const WeightVector& a, const WeightVector& b);

// W = { w : K_{lambda/mu,w} > 0 and sorted(w) dominates sorted(lambda-mu) }.
std::vector<WeightVector> conjecture_W(const SkewShape& shape);

struct VertexWeights {
    std::vector<RatVec> vertices;                // all vertices, sorted
    std::vector<WeightVector> integral_weights;  // multiset, sorted, one per integral vertex
    std::vector<RatVec> nonintegral_vertices;    // excluded from the factor multiset
};

VertexWeights vertex_weights(const SkewShape& shape);

struct CounterexampleReport {
    SkewShape shape;
    std::vector<WeightVector> W;
    VertexWeights vw;
    std::vector<WeightVector> missing;  // members of W that are not vertex weights
    bool divides = false;               // conjecture's factor multiset contained in vertex factors
    bool refuted = false;
};

CounterexampleReport counterexample_report(const SkewShape& shape);

// Vertex-set equality of GL_{kappa+l*lambda / nu+l*mu} and
// GL_{kappa+r*lambda / nu+r*mu} + (l-r) GL_{lambda/mu}.
bool gt_minkowski_check(const Partition& kappa, const Partition& lambda, const Partition& mu,
                        const Partition& nu, int n, long long r, long long l);

// Smallest r >= 1 with: f_i < f_j implies r f_i + g_i < r f_j + g_j, where
// f = (lambda, mu) and g = (kappa, nu).
long long corollary_r(const Partition& kappa, const Partition& lambda, const Partition& mu,
                      const Partition& nu, int n);

struct SchurRecursionResult {
    bool holds = false;
    long long r_used = 0;
    long long l_start = 0;
    long long l_max = 0;
    int order = 0;  // number of GT vertices = recursion order
    std::vector<WeightVector> vertex_weight_roots;
    bool roots_are_tableau_weights = false;  // factor multiset sits inside the tableau factors
    long long failed_l = -1;
};

// Verifies the vertex-weight recursion for s_{kappa+l*lambda / nu+l*mu},
// l from l_start (default: the constructive r) to l_max.
SchurRecursionResult schur_recursion_check(const Partition& kappa, const Partition& lambda,
                                           const Partition& mu, const Partition& nu, int n,
                                           long long l_max, long long l_start = -1);

}  // namespace polyrec
