#include "polyrec/brion.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "polyrec/lp.hpp"
#include "polyrec/transform.hpp"

namespace polyrec {

namespace {

Expo primitive(Expo d) {
    long long g = 0;
    for (auto c : d) g = std::gcd(g, c < 0 ? -c : c);
    if (g == 0) throw std::invalid_argument("primitive: zero direction");
    for (auto& c : d) c /= g;
    return d;
}

RatVec to_ratvec(const Expo& e) {
    RatVec v(e.size());
    for (size_t i = 0; i < e.size(); ++i) v[i] = Rat(static_cast<long>(e[i]));
    return v;
}

bool cone_is_pointed(const std::vector<Expo>& gens) {
    if (gens.empty()) return true;
    // Non-pointed iff 0 is a convex combination of the (nonzero) generators.
    std::vector<RatVec> pts;
    for (const auto& g : gens) pts.push_back(to_ratvec(g));
    return !in_convex_hull(RatVec(gens[0].size(), Rat(0)), pts);
}

int rank_of(const std::vector<Expo>& gens, int dim) {
    std::vector<RatVec> rows;
    for (const auto& g : gens) rows.push_back(to_ratvec(g));
    rows.push_back(RatVec(dim, Rat(0)));
    return affine_rank(rows);  // rank of the linear span: affine rank with 0 adjoined
}

}  // namespace

Laurent denominator_product(const std::vector<Expo>& gens, int dim) {
    Laurent prod = Laurent::constant(dim, 1);
    for (const auto& g : gens) {
        Laurent factor = Laurent::constant(dim, 1);
        factor.add_term(g, -1);
        prod = prod * factor;
    }
    return prod;
}

bool rational_fn_equal(const RationalFn& f, const RationalFn& g) {
    int dim = f.numerator.dim();
    return f.numerator * denominator_product(g.denominator_factors, dim) ==
           g.numerator * denominator_product(f.denominator_factors, dim);
}

PointedCone tangent_cone(const Polytope& P, const Expo& v) {
    const int n = P.ambient_dim();
    auto verts = P.integer_vertices();
    auto it = std::find(verts.begin(), verts.end(), v);
    if (it == verts.end()) throw std::invalid_argument("tangent_cone: not a vertex");

    const HRep& h = P.hrep();
    RatVec vr = to_ratvec(v);
    auto tight_at = [&](const RatVec& x) {
        std::vector<int> idx;
        for (size_t i = 0; i < h.ineqs.size(); ++i)
            if (hrow_eval(h.ineqs[i], x) == h.ineqs[i].b) idx.push_back(static_cast<int>(i));
        return idx;
    };
    std::vector<int> tv = tight_at(vr);

    PointedCone cone;
    cone.apex = v;
    std::set<Expo> gens;
    for (const auto& w : verts) {
        if (w == v) continue;
        RatVec wr = to_ratvec(w);
        std::vector<int> tw = tight_at(wr);
        std::vector<int> common;
        std::set_intersection(tv.begin(), tv.end(), tw.begin(), tw.end(),
                              std::back_inserter(common));
        // [v,w] is an edge iff the constraints tight on both pin down a line.
        std::vector<RatVec> normals;
        for (int i : common) {
            RatVec a(n);
            for (int j = 0; j < n; ++j) a[j] = Rat(h.ineqs[i].a[j]);
            normals.push_back(std::move(a));
        }
        for (const auto& e : h.eqs) {
            RatVec a(n);
            for (int j = 0; j < n; ++j) a[j] = Rat(e.a[j]);
            normals.push_back(std::move(a));
        }
        normals.push_back(RatVec(n, Rat(0)));
        if (affine_rank(normals) != n - 1) continue;
        Expo d(n);
        for (int j = 0; j < n; ++j) d[j] = w[j] - v[j];
        gens.insert(primitive(std::move(d)));
    }
    cone.generators.assign(gens.begin(), gens.end());
    std::sort(cone.generators.begin(), cone.generators.end(), GradedLexLess{});
    return cone;
}

std::vector<Expo> parallelepiped_points(const std::vector<Expo>& gens, int dim) {
    std::vector<Expo> out;
    const int d = static_cast<int>(gens.size());
    if (d == 0) {
        out.push_back(Expo(dim, 0));
        return out;
    }
    // Bounding box of the closed parallelepiped from its 2^d corners.
    std::vector<long long> lo(dim, 0), hi(dim, 0);
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
        std::vector<long long> corner(dim, 0);
        for (int i = 0; i < d; ++i)
            if (mask & (1u << i))
                for (int j = 0; j < dim; ++j) corner[j] += gens[i][j];
        for (int j = 0; j < dim; ++j) {
            lo[j] = std::min(lo[j], corner[j]);
            hi[j] = std::max(hi[j], corner[j]);
        }
    }
    // Solve G lambda = m for each candidate; keep 0 <= lambda < 1.
    std::vector<RatVec> cols;  // G as rows of the transposed system
    Expo m(dim, 0);
    auto accept = [&](const Expo& cand) {
        // Gaussian elimination on [G | cand] with G the dim x d matrix of
        // generator columns.
        std::vector<RatVec> aug(dim, RatVec(d + 1, Rat(0)));
        for (int i = 0; i < dim; ++i) {
            for (int j = 0; j < d; ++j) aug[i][j] = Rat(static_cast<long>(gens[j][i]));
            aug[i][d] = Rat(static_cast<long>(cand[i]));
        }
        int row = 0;
        std::vector<int> piv_col(d, -1);
        for (int col = 0; col < d && row < dim; ++col) {
            int piv = -1;
            for (int i = row; i < dim; ++i)
                if (aug[i][col] != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return false;  // generators independent, so never hit
            std::swap(aug[row], aug[piv]);
            for (int i = 0; i < dim; ++i) {
                if (i == row || aug[i][col] == 0) continue;
                Rat f = aug[i][col] / aug[row][col];
                for (int j = col; j <= d; ++j) aug[i][j] -= f * aug[row][j];
            }
            piv_col[col] = row;
            ++row;
        }
        for (int i = row; i < dim; ++i)
            if (aug[i][d] != 0) return false;  // cand outside the span
        for (int col = 0; col < d; ++col) {
            Rat lambda = aug[piv_col[col]][d] / aug[piv_col[col]][col];
            if (lambda < 0 || lambda >= 1) return false;
        }
        return true;
    };
    auto scan = [&](auto&& self, int level) -> void {
        if (level == dim) {
            if (accept(m)) out.push_back(m);
            return;
        }
        for (long long t = lo[level]; t <= hi[level]; ++t) {
            m[level] = t;
            self(self, level + 1);
        }
    };
    scan(scan, 0);
    std::sort(out.begin(), out.end(), GradedLexLess{});
    return out;
}

RationalFn cone_transform(const PointedCone& c) {
    const int dim = static_cast<int>(c.apex.size());
    const int d = static_cast<int>(c.generators.size());
    for (const auto& g : c.generators)
        if (std::all_of(g.begin(), g.end(), [](int64_t v) { return v == 0; }))
            throw std::invalid_argument("cone_transform: zero generator");
    if (rank_of(c.generators, dim) != d)
        throw std::invalid_argument("cone_transform: non-simplicial cone (dependent generators)");
    if (!cone_is_pointed(c.generators))
        throw std::invalid_argument("cone_transform: cone is not pointed");

    RationalFn fn;
    fn.denominator_factors = c.generators;
    fn.numerator = Laurent(dim);
    for (const auto& m : parallelepiped_points(c.generators, dim))
        fn.numerator.add_term(expo_add(m, c.apex), 1);
    return fn;
}

BrionReport brion_check(const Polytope& P) {
    const int dim = P.ambient_dim();
    const int pdim = P.dim();
    auto verts = P.integer_vertices();

    BrionReport rep;
    for (const auto& v : verts) {
        PointedCone cone = tangent_cone(P, v);
        if (static_cast<int>(cone.generators.size()) != pdim)
            throw std::invalid_argument(
                "brion_check: vertex cone is not simplicial; unsupported input");
        rep.terms.push_back({v, cone_transform(cone)});
    }

    Laurent sigma = integer_point_transform(P);
    Laurent lhs = sigma;
    for (const auto& term : rep.terms)
        lhs = lhs * denominator_product(term.fn.denominator_factors, dim);

    Laurent rhs(dim);
    for (size_t i = 0; i < rep.terms.size(); ++i) {
        Laurent part = rep.terms[i].fn.numerator;
        for (size_t j = 0; j < rep.terms.size(); ++j) {
            if (j == i) continue;
            part = part * denominator_product(rep.terms[j].fn.denominator_factors, dim);
        }
        rhs += part;
    }
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.verified = (lhs == rhs);
    return rep;
}

}  // namespace polyrec
