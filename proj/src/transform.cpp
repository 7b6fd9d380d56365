#include "polyrec/transform.hpp"

#include <sstream>
#include <stdexcept>

namespace polyrec {

Laurent integer_point_transform(const Polytope& P) {
    Laurent sigma(P.ambient_dim());
    for (const auto& m : lattice_points(P)) sigma.add_term(m, 1);
    return sigma;
}

std::vector<Laurent> char_poly(const Polytope& P) {
    auto verts = P.integer_vertices();
    const int r = static_cast<int>(verts.size());
    std::vector<Laurent> coeffs;
    for (int j = 0; j <= r; ++j) {
        Laurent e = elementary_symmetric(verts, j);
        coeffs.push_back(j % 2 == 0 ? e : -e);
    }
    return coeffs;
}

std::vector<Laurent> transform_sequence(const Polytope& P, const Polytope& Q, int count) {
    if (P.ambient_dim() != Q.ambient_dim())
        throw std::invalid_argument("transform_sequence: dimension mismatch");
    std::vector<Laurent> out;
    out.reserve(count);
    for (int k = 0; k < count; ++k)
        out.push_back(integer_point_transform(minkowski_sum(dilate(P, k), Q)));
    return out;
}

namespace {

// sum_{j=0}^{deg} coeffs[j] * sigma[k + deg - j], the recursion defect at k.
Laurent recursion_defect(const std::vector<Laurent>& coeffs, const std::vector<Laurent>& sigma,
                         int k) {
    const int deg = static_cast<int>(coeffs.size()) - 1;
    Laurent acc(sigma[0].dim());
    for (int j = 0; j <= deg; ++j) acc += coeffs[j] * sigma[k + deg - j];
    return acc;
}

}  // namespace

RecursionCertificate verify_recursion(const Polytope& P, const Polytope& Q, int k_max) {
    if (k_max < 0) throw std::invalid_argument("verify_recursion: negative k_max");
    RecursionCertificate cert;
    cert.char_poly_coeffs = char_poly(P);
    const int r = static_cast<int>(P.vrep().points.size());
    cert.k_min = 0;
    cert.k_max = k_max;
    auto sigma = transform_sequence(P, Q, k_max + r + 1);
    cert.holds = true;
    for (int k = 0; k <= k_max; ++k) {
        Laurent defect = recursion_defect(cert.char_poly_coeffs, sigma, k);
        if (!defect.is_zero()) {
            cert.holds = false;
            cert.failed_k = k;
            cert.defect = defect;
            break;
        }
    }
    return cert;
}

std::vector<std::pair<Expo, Laurent>> minimality_residuals(const Polytope& P,
                                                           const Polytope& Q) {
    auto verts = P.integer_vertices();
    const int r = static_cast<int>(verts.size());
    auto sigma = transform_sequence(P, Q, 2 * r + 1);

    std::vector<std::pair<Expo, Laurent>> out;
    for (int u = 0; u < r; ++u) {
        std::vector<Expo> others;
        for (int i = 0; i < r; ++i)
            if (i != u) others.push_back(verts[i]);
        std::vector<Laurent> coeffs;
        for (int j = 0; j <= r - 1; ++j) {
            Laurent e = elementary_symmetric(others, j);
            coeffs.push_back(j % 2 == 0 ? e : -e);
        }
        Laurent at_zero = recursion_defect(coeffs, sigma, 0);
        bool vanish = at_zero.is_zero();
        // The dropped-factor recursion has distinct monomial roots, so one
        // evaluation decides; k = 0..r are still all checked and must agree.
        for (int k = 1; k <= r; ++k) {
            Laurent at_k = recursion_defect(coeffs, sigma, k);
            if (at_k.is_zero() != vanish) {
                std::ostringstream msg;
                msg << "minimality residual inconsistent for dropped vertex index " << u
                    << " between k=0 and k=" << k;
                throw std::runtime_error(msg.str());
            }
        }
        out.push_back({verts[u], std::move(at_zero)});
    }
    return out;
}

RecursionCertificate verify_with_minimality(const Polytope& P, const Polytope& Q, int k_max) {
    RecursionCertificate cert = verify_recursion(P, Q, k_max);
    cert.minimality_residuals = minimality_residuals(P, Q);
    cert.minimality_computed = true;
    cert.minimal = true;
    for (const auto& [v, res] : cert.minimality_residuals)
        if (res.is_zero()) cert.minimal = false;
    return cert;
}

IntBox default_indicator_box(const Polytope& P, int k) {
    const int r = static_cast<int>(P.vrep().points.size());
    IntBox box = bounding_box(dilate(P, k + r));
    for (auto& [lo, hi] : box) {
        lo -= 1;
        hi += 1;
    }
    return box;
}

IndicatorCheckResult indicator_recursion_check(const Polytope& P, int k, const IntBox& box) {
    if (k < 0) throw std::invalid_argument("indicator_recursion_check: negative k");
    const int n = P.ambient_dim();
    if (static_cast<int>(box.size()) != n)
        throw std::invalid_argument("indicator_recursion_check: box dimension mismatch");
    const auto& verts = P.vrep().points;
    const int r = static_cast<int>(verts.size());
    if (r > 16) throw std::invalid_argument("indicator_recursion_check: too many vertices");

    Polytope lhs_poly = dilate(P, k + r);
    // One dilate per subset size, translated per subset.
    std::vector<Polytope> level(r + 1, Polytope::empty(n));
    for (int j = 1; j <= r; ++j) level[j] = dilate(P, k + r - j);
    struct Term {
        Polytope poly;
        int sign;
    };
    std::vector<Term> terms;
    for (unsigned mask = 1; mask < (1u << r); ++mask) {
        int size = __builtin_popcount(mask);
        RatVec shift(n, Rat(0));
        for (int i = 0; i < r; ++i)
            if (mask & (1u << i))
                for (int j = 0; j < n; ++j) shift[j] += verts[i][j];
        terms.push_back({translate(level[size], shift), (size % 2 == 1) ? 1 : -1});
    }

    IndicatorCheckResult res;
    RatVec pt(n);
    std::vector<long long> t(n);
    auto visit = [&](auto&& self, int level_i) -> bool {
        if (level_i == n) {
            ++res.samples;
            long long lhs = lhs_poly.contains(pt) ? 1 : 0;
            long long rhs = 0;
            for (const auto& term : terms)
                if (term.poly.contains(pt)) rhs += term.sign;
            if (lhs != rhs) {
                res.ok = false;
                res.point = pt;
                res.lhs = lhs;
                res.rhs = rhs;
                return false;
            }
            return true;
        }
        for (long long v = 2 * box[level_i].first; v <= 2 * box[level_i].second; ++v) {
            pt[level_i] = make_rat(to_int(v), 2);
            if (!self(self, level_i + 1)) return false;
        }
        return true;
    };
    visit(visit, 0);
    return res;
}

LatticeMap LatticeMap::identity(int n) {
    LatticeMap f{n, n, std::vector<std::vector<int64_t>>(n, std::vector<int64_t>(n, 0))};
    for (int i = 0; i < n; ++i) f.m[i][i] = 1;
    return f;
}

Expo LatticeMap::apply(const Expo& e) const {
    if (static_cast<int>(e.size()) != cols)
        throw std::invalid_argument("LatticeMap: exponent dimension mismatch");
    Expo out(rows, 0);
    for (int i = 0; i < rows; ++i) {
        int64_t s = 0;
        for (int j = 0; j < cols; ++j) s += m[i][j] * e[j];
        out[i] = s;
    }
    return out;
}

Laurent specialize(const Laurent& p, const LatticeMap& f) {
    if (p.dim() != f.cols) throw std::invalid_argument("specialize: dimension mismatch");
    Laurent out(f.rows);
    for (const auto& [e, c] : p.terms()) out.add_term(f.apply(e), c);
    return out;
}

std::vector<long long> ehrhart_sequence(const Polytope& P, int k_max) {
    if (!P.is_lattice()) throw std::invalid_argument("ehrhart_sequence: non-lattice polytope");
    std::vector<long long> counts;
    for (int k = 0; k <= k_max; ++k)
        counts.push_back(static_cast<long long>(lattice_points(dilate(P, k)).size()));
    // The count sequence agrees with a polynomial of degree dim P, so the
    // (dim P + 1)-st difference must vanish wherever the window shows it.
    int order = P.dim() + 1;
    if (k_max >= order && !differences_vanish(counts, order))
        throw std::runtime_error("ehrhart_sequence: counts violate the dilation recursion");
    return counts;
}

bool differences_vanish(const std::vector<long long>& seq, int order) {
    if (static_cast<int>(seq.size()) <= order)
        throw std::invalid_argument("differences_vanish: sequence too short for the order");
    std::vector<long long> d = seq;
    for (int s = 0; s < order; ++s) {
        std::vector<long long> next;
        for (size_t i = 0; i + 1 < d.size(); ++i) next.push_back(d[i + 1] - d[i]);
        d = std::move(next);
    }
    for (auto v : d)
        if (v != 0) return false;
    return true;
}

int min_vanishing_difference_order(const std::vector<long long>& seq) {
    std::vector<long long> d = seq;
    for (int order = 0; !d.empty(); ++order) {
        bool all_zero = true;
        for (auto v : d)
            if (v != 0) {
                all_zero = false;
                break;
            }
        if (all_zero) return order;
        std::vector<long long> next;
        for (size_t i = 0; i + 1 < d.size(); ++i) next.push_back(d[i + 1] - d[i]);
        d = std::move(next);
    }
    return -1;
}

}  // namespace polyrec
