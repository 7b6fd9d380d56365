#include "polyrec/polytope.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <stdexcept>

#include "polyrec/lp.hpp"

namespace polyrec {

namespace {

// ---- exact linear algebra helpers ----------------------------------------

// Row echelon over the rationals; returns the rank. `rows` is modified.
int gauss_rank(std::vector<RatVec>& rows) {
    if (rows.empty()) return 0;
    const int ncols = static_cast<int>(rows[0].size());
    int rank = 0;
    for (int col = 0; col < ncols && rank < static_cast<int>(rows.size()); ++col) {
        int piv = -1;
        for (int i = rank; i < static_cast<int>(rows.size()); ++i)
            if (rows[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            if (i == rank || rows[i][col] == 0) continue;
            Rat f = rows[i][col] / rows[rank][col];
            for (int j = col; j < ncols; ++j) rows[i][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

// Basis of { a : M a = 0 } where the rows of M are the constraints.
std::vector<RatVec> nullspace(std::vector<RatVec> rows, int nvars) {
    int rank = gauss_rank(rows);
    rows.resize(rank);
    // Locate pivot columns of the echelon form.
    std::vector<int> pivot_col(rank, -1);
    std::vector<bool> is_pivot(nvars, false);
    for (int i = 0; i < rank; ++i) {
        for (int j = 0; j < nvars; ++j)
            if (rows[i][j] != 0) {
                pivot_col[i] = j;
                is_pivot[j] = true;
                break;
            }
    }
    std::vector<RatVec> basis;
    for (int freecol = 0; freecol < nvars; ++freecol) {
        if (is_pivot[freecol]) continue;
        RatVec v(nvars, Rat(0));
        v[freecol] = 1;
        for (int i = rank - 1; i >= 0; --i) {
            Rat s = 0;
            for (int j = pivot_col[i] + 1; j < nvars; ++j) s += rows[i][j] * v[j];
            v[pivot_col[i]] = -s / rows[i][pivot_col[i]];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// Unique solution of the square-ish system rows(a|b); nullopt when the
// solution is not unique or the system is inconsistent.
std::optional<RatVec> solve_unique(std::vector<RatVec> aug, int nvars) {
    const int m = static_cast<int>(aug.size());
    int rank = 0;
    std::vector<int> pivot_col;
    for (int col = 0; col < nvars && rank < m; ++col) {
        int piv = -1;
        for (int i = rank; i < m; ++i)
            if (aug[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(aug[rank], aug[piv]);
        for (int i = 0; i < m; ++i) {
            if (i == rank || aug[i][col] == 0) continue;
            Rat f = aug[i][col] / aug[rank][col];
            for (int j = col; j <= nvars; ++j) aug[i][j] -= f * aug[rank][j];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    if (rank < nvars) return std::nullopt;
    for (int i = rank; i < m; ++i)
        if (aug[i][nvars] != 0) return std::nullopt;  // inconsistent
    RatVec x(nvars, Rat(0));
    for (int i = 0; i < rank; ++i) x[pivot_col[i]] = aug[i][nvars] / aug[i][pivot_col[i]];
    return x;
}

}  // namespace

int affine_rank(const std::vector<RatVec>& points) {
    if (points.empty()) return -1;
    std::vector<RatVec> diffs;
    for (size_t i = 1; i < points.size(); ++i) {
        RatVec d(points[0].size());
        for (size_t j = 0; j < d.size(); ++j) d[j] = points[i][j] - points[0][j];
        diffs.push_back(std::move(d));
    }
    return gauss_rank(diffs);
}

Rat hrow_eval(const HRow& row, const RatVec& x) {
    Rat s = 0;
    for (size_t i = 0; i < row.a.size(); ++i) s += Rat(row.a[i]) * x[i];
    return s;
}

std::optional<HRow> normalize_row(const RatVec& a, const Rat& b) {
    Int lcm = 1;
    for (const auto& c : a) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), b.get_den_mpz_t());
    HRow row;
    row.a.resize(a.size());
    Int g = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        Rat v = Rat(lcm) * a[i];
        row.a[i] = v.get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row.a[i].get_mpz_t());
    }
    row.b = Rat(Rat(lcm) * b).get_num();
    if (g == 0) return std::nullopt;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row.b.get_mpz_t());
    if (g > 1) {
        for (auto& c : row.a) c /= g;
        row.b /= g;
    }
    return row;
}

namespace {

HRow canonical_equality(HRow row) {
    for (const auto& c : row.a) {
        if (c == 0) continue;
        if (c < 0) {
            for (auto& x : row.a) x = -x;
            row.b = -row.b;
        }
        break;
    }
    return row;
}

// Complete, canonical set of affine-hull equalities of the given points.
std::vector<HRow> affine_hull_rows(const std::vector<RatVec>& points, int nvars) {
    std::vector<HRow> out;
    if (points.empty() || nvars == 0) return out;
    std::vector<RatVec> diffs;
    for (size_t i = 1; i < points.size(); ++i) {
        RatVec d(nvars);
        for (int j = 0; j < nvars; ++j) d[j] = points[i][j] - points[0][j];
        diffs.push_back(std::move(d));
    }
    for (const auto& a : nullspace(std::move(diffs), nvars)) {
        auto row = normalize_row(a, dot(a, points[0]));
        if (row) out.push_back(canonical_equality(*row));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---- Fourier-Motzkin with interleaved redundancy pruning -----------------
//
// Invariant kept between elimination steps: the feasible set of the current
// system equals conv(pts), where pts are the projections of the lifted
// simplex vertices (v_i, e_i). Candidate inequalities are therefore pruned
// exactly: a row survives iff the points it is tight at span a facet.

struct FmRow {
    RatVec a;
    Rat b;
};

std::vector<FmRow> facet_filter(std::vector<FmRow> rows, const std::vector<RatVec>& pts) {
    int dim = affine_rank(pts);
    std::vector<FmRow> out;
    if (dim <= 0) return out;

    // Normalize for dedup and determinism.
    std::set<std::pair<std::vector<Int>, Int>> seen_rows;
    std::vector<FmRow> cands;
    for (auto& r : rows) {
        auto n = normalize_row(r.a, r.b);
        if (!n) continue;  // trivial row; infeasibility cannot arise here
        if (!seen_rows.insert({n->a, n->b}).second) continue;
        FmRow fr;
        fr.a.assign(n->a.begin(), n->a.end());
        fr.b = Rat(n->b);
        cands.push_back(std::move(fr));
    }
    std::sort(cands.begin(), cands.end(), [](const FmRow& x, const FmRow& y) {
        return x.a < y.a || (x.a == y.a && x.b < y.b);
    });

    std::set<std::vector<int>> seen_faces;
    for (const auto& r : cands) {
        std::vector<int> touching;
        std::vector<RatVec> tpts;
        for (size_t i = 0; i < pts.size(); ++i) {
            Rat v = dot(r.a, pts[i]);
            if (v == r.b) {
                touching.push_back(static_cast<int>(i));
                tpts.push_back(pts[i]);
            }
        }
        if (touching.empty()) continue;
        if (affine_rank(tpts) != dim - 1) continue;
        if (seen_faces.insert(touching).second) out.push_back(r);
    }
    return out;
}

void drop_coordinate(RatVec& v, int k) { v.erase(v.begin() + k); }

}  // namespace

HRep v_to_h(int ambient_dim, const VRep& v) {
    const int n = ambient_dim;
    const int r = static_cast<int>(v.points.size());
    if (r == 0) throw std::invalid_argument("v_to_h: empty vertex set");

    HRep h;
    if (n == 0) return h;
    if (r == 1) {
        for (int j = 0; j < n; ++j) {
            RatVec a(n, Rat(0));
            a[j] = 1;
            h.eqs.push_back(canonical_equality(*normalize_row(a, v.points[0][j])));
        }
        std::sort(h.eqs.begin(), h.eqs.end());
        return h;
    }

    // Variables: x_0..x_{n-1}, lambda_0..lambda_{r-1}.
    int nv = n + r;
    std::vector<FmRow> ineqs;
    std::vector<FmRow> eqs;
    for (int i = 0; i < r; ++i) {  // -lambda_i <= 0
        FmRow row;
        row.a.assign(nv, Rat(0));
        row.a[n + i] = -1;
        row.b = 0;
        ineqs.push_back(std::move(row));
    }
    for (int j = 0; j < n; ++j) {  // x_j - sum_i v_ij lambda_i = 0
        FmRow row;
        row.a.assign(nv, Rat(0));
        row.a[j] = 1;
        for (int i = 0; i < r; ++i) row.a[n + i] = -v.points[i][j];
        row.b = 0;
        eqs.push_back(std::move(row));
    }
    {
        FmRow row;  // sum lambda_i = 1
        row.a.assign(nv, Rat(0));
        for (int i = 0; i < r; ++i) row.a[n + i] = 1;
        row.b = 1;
        eqs.push_back(std::move(row));
    }

    // Projections of the lifted simplex vertices (v_i, e_i).
    std::vector<RatVec> pts(r, RatVec(nv, Rat(0)));
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < n; ++j) pts[i][j] = v.points[i][j];
        pts[i][n + i] = 1;
    }

    int remaining = r;
    while (remaining > 0) {
        int k = -1;  // variable index to eliminate (lambda block starts at n)
        int use_eq = -1;
        for (size_t e = 0; e < eqs.size() && use_eq < 0; ++e)
            for (int c = n; c < nv; ++c)
                if (eqs[e].a[c] != 0) {
                    use_eq = static_cast<int>(e);
                    k = c;
                    break;
                }
        if (use_eq >= 0) {
            FmRow E = eqs[use_eq];
            eqs.erase(eqs.begin() + use_eq);
            auto substitute = [&](FmRow& row) {
                if (row.a[k] == 0) return;
                Rat f = row.a[k] / E.a[k];
                for (int j = 0; j < nv; ++j) row.a[j] -= f * E.a[j];
                row.b -= f * E.b;
            };
            for (auto& row : ineqs) substitute(row);
            for (auto& row : eqs) substitute(row);
        } else {
            // Pure inequality elimination; pick the cheapest remaining lambda.
            long best_cost = -1;
            for (int c = n; c < nv; ++c) {
                long pos = 0, neg = 0;
                for (const auto& row : ineqs) {
                    if (row.a[c] > 0) ++pos;
                    if (row.a[c] < 0) ++neg;
                }
                long cost = pos * neg + pos + neg;
                if (best_cost < 0 || cost < best_cost) {
                    best_cost = cost;
                    k = c;
                }
            }
            std::vector<FmRow> next;
            std::vector<int> pos, neg;
            for (size_t i = 0; i < ineqs.size(); ++i) {
                if (ineqs[i].a[k] > 0)
                    pos.push_back(static_cast<int>(i));
                else if (ineqs[i].a[k] < 0)
                    neg.push_back(static_cast<int>(i));
                else
                    next.push_back(ineqs[i]);
            }
            for (int p : pos)
                for (int q : neg) {
                    const FmRow& P = ineqs[p];
                    const FmRow& N = ineqs[q];
                    Rat cp = P.a[k], cn = -N.a[k];  // both positive scales
                    FmRow row;
                    row.a.resize(nv);
                    for (int j = 0; j < nv; ++j) row.a[j] = cn * P.a[j] + cp * N.a[j];
                    row.b = cn * P.b + cp * N.b;
                    next.push_back(std::move(row));
                }
            ineqs = std::move(next);
        }

        for (auto& row : ineqs) drop_coordinate(row.a, k);
        for (auto& row : eqs) drop_coordinate(row.a, k);
        for (auto& p : pts) drop_coordinate(p, k);
        --nv;
        --remaining;
        ineqs = facet_filter(std::move(ineqs), pts);
    }

    HRep h_out;
    for (const auto& row : ineqs) {
        auto nrow = normalize_row(row.a, row.b);
        if (nrow) h_out.ineqs.push_back(*nrow);
    }
    std::sort(h_out.ineqs.begin(), h_out.ineqs.end());
    h_out.eqs = affine_hull_rows(v.points, n);
    return h_out;
}

VRep canonicalize_vertices(int ambient_dim, const std::vector<RatVec>& points) {
    if (points.empty()) throw std::invalid_argument("canonicalize_vertices: empty input");
    std::set<RatVec> uniq;
    for (const auto& p : points) {
        if (static_cast<int>(p.size()) != ambient_dim)
            throw std::invalid_argument("canonicalize_vertices: point dimension mismatch");
        uniq.insert(p);
    }
    std::vector<RatVec> pts(uniq.begin(), uniq.end());
    VRep out;
    if (pts.size() == 1) {
        out.points = pts;
        return out;
    }
    for (size_t i = 0; i < pts.size(); ++i) {
        std::vector<RatVec> others;
        for (size_t j = 0; j < pts.size(); ++j)
            if (j != i) others.push_back(pts[j]);
        if (!in_convex_hull(pts[i], others)) out.points.push_back(pts[i]);
    }
    std::sort(out.points.begin(), out.points.end());
    return out;
}

VRep vertex_enumeration(int ambient_dim, const HRep& h) {
    const int n = ambient_dim;
    VRep out;
    if (n == 0) {
        for (const auto& row : h.ineqs)
            if (row.b < 0) throw std::invalid_argument("vertex_enumeration: infeasible input");
        for (const auto& row : h.eqs)
            if (row.b != 0) throw std::invalid_argument("vertex_enumeration: infeasible input");
        out.points.push_back(RatVec{});
        return out;
    }

    auto as_ratrow = [n](const HRow& r) {
        RatVec a(n);
        for (int j = 0; j < n; ++j) a[j] = Rat(r.a[j]);
        return a;
    };

    {
        LinSys sys;
        sys.nvars = n;
        for (const auto& r : h.ineqs) sys.ineqs.push_back({as_ratrow(r), Rat(r.b)});
        for (const auto& r : h.eqs) sys.eqs.push_back({as_ratrow(r), Rat(r.b)});
        if (!lp_feasible(sys)) throw std::invalid_argument("vertex_enumeration: infeasible input");
    }
    {
        // Recession cone must be trivial for a bounded polytope.
        for (int j = 0; j < n; ++j)
            for (int sgn : {1, -1}) {
                LinSys sys;
                sys.nvars = n;
                for (const auto& r : h.ineqs) sys.ineqs.push_back({as_ratrow(r), Rat(0)});
                for (const auto& r : h.eqs) sys.eqs.push_back({as_ratrow(r), Rat(0)});
                RatVec unit(n, Rat(0));
                unit[j] = 1;
                sys.eqs.push_back({unit, Rat(sgn)});
                if (lp_feasible(sys))
                    throw std::invalid_argument("vertex_enumeration: unbounded input");
            }
    }

    // Independent equality rows.
    std::vector<RatVec> eq_aug;
    for (const auto& r : h.eqs) {
        RatVec row = as_ratrow(r);
        row.push_back(Rat(r.b));
        eq_aug.push_back(std::move(row));
    }
    int erank = gauss_rank(eq_aug);
    eq_aug.resize(erank);

    const int m = static_cast<int>(h.ineqs.size());
    const int t = n - erank;
    if (t < 0) throw std::logic_error("vertex_enumeration: overdetermined equalities");

    auto feasible = [&](const RatVec& x) {
        for (const auto& r : h.ineqs)
            if (hrow_eval(r, x) > r.b) return false;
        for (const auto& r : h.eqs)
            if (hrow_eval(r, x) != r.b) return false;
        return true;
    };

    std::set<RatVec> found;
    std::vector<int> idx(t);
    for (int i = 0; i < t; ++i) idx[i] = i;
    auto process = [&]() {
        std::vector<RatVec> aug = eq_aug;
        for (int i : idx) {
            RatVec row = as_ratrow(h.ineqs[i]);
            row.push_back(Rat(h.ineqs[i].b));
            aug.push_back(std::move(row));
        }
        auto x = solve_unique(std::move(aug), n);
        if (x && feasible(*x)) found.insert(*x);
    };
    if (t == 0) {
        process();
    } else if (t <= m) {
        while (true) {
            process();
            int i = t - 1;
            while (i >= 0 && idx[i] == m - t + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    if (found.empty()) throw std::invalid_argument("vertex_enumeration: infeasible input");
    out.points.assign(found.begin(), found.end());
    return out;
}

// ---- Polytope -------------------------------------------------------------

struct Polytope::Impl {
    int n = 0;
    bool empty_flag = false;
    std::once_flag vonce, honce, donce;
    std::atomic<bool> v_ready{false}, h_ready{false};
    std::optional<VRep> v;
    std::optional<HRep> h;
    std::optional<IntBox> hint;
    int affdim = -2;
};

Polytope Polytope::from_points(int ambient_dim, std::vector<RatVec> pts) {
    return from_vertices(ambient_dim, canonicalize_vertices(ambient_dim, pts).points);
}

Polytope Polytope::from_vertices(int ambient_dim, std::vector<RatVec> verts,
                                 std::optional<HRep> hrep) {
    if (verts.empty()) throw std::invalid_argument("from_vertices: empty vertex list");
    auto impl = std::make_shared<Impl>();
    impl->n = ambient_dim;
    std::sort(verts.begin(), verts.end());
    impl->v = VRep{std::move(verts)};
    impl->v_ready = true;
    if (hrep) {
        impl->h = std::move(*hrep);
        impl->h_ready = true;
    }
    return Polytope(std::move(impl));
}

Polytope Polytope::from_hrep(int ambient_dim, HRep h, std::optional<IntBox> hint) {
    auto impl = std::make_shared<Impl>();
    impl->n = ambient_dim;
    impl->h = std::move(h);
    impl->h_ready = true;
    impl->hint = std::move(hint);
    return Polytope(std::move(impl));
}

Polytope Polytope::empty(int ambient_dim) {
    auto impl = std::make_shared<Impl>();
    impl->n = ambient_dim;
    impl->empty_flag = true;
    impl->v = VRep{};
    impl->v_ready = true;
    HRep h;
    if (ambient_dim > 0) {
        HRow contradiction;  // 0 <= -1
        contradiction.a.assign(ambient_dim, Int(0));
        contradiction.b = -1;
        h.ineqs.push_back(std::move(contradiction));
    }
    impl->h = std::move(h);
    impl->h_ready = true;
    impl->affdim = -1;
    return Polytope(std::move(impl));
}

Polytope Polytope::single_point(RatVec p) {
    int n = static_cast<int>(p.size());
    HRep h;
    for (int j = 0; j < n; ++j) {
        RatVec a(n, Rat(0));
        a[j] = 1;
        auto row = normalize_row(a, p[j]);
        h.eqs.push_back(canonical_equality(*row));
    }
    std::sort(h.eqs.begin(), h.eqs.end());
    return from_vertices(n, {std::move(p)}, std::move(h));
}

int Polytope::ambient_dim() const { return impl_->n; }

bool Polytope::is_empty() const { return impl_->empty_flag; }

const VRep& Polytope::vrep() const {
    std::call_once(impl_->vonce, [this] {
        if (!impl_->v) {
            impl_->v = vertex_enumeration(impl_->n, *impl_->h);
            impl_->v_ready = true;
        }
    });
    return *impl_->v;
}

const HRep& Polytope::hrep() const {
    std::call_once(impl_->honce, [this] {
        if (!impl_->h) {
            impl_->h = v_to_h(impl_->n, *impl_->v);
            impl_->h_ready = true;
        }
    });
    return *impl_->h;
}

int Polytope::dim() const {
    std::call_once(impl_->donce, [this] {
        if (impl_->affdim == -2) impl_->affdim = affine_rank(vrep().points);
    });
    return impl_->affdim;
}

bool Polytope::contains(const RatVec& x) const {
    if (static_cast<int>(x.size()) != impl_->n)
        throw std::invalid_argument("contains: dimension mismatch");
    if (impl_->empty_flag) return false;
    if (impl_->h_ready) {
        for (const auto& r : impl_->h->ineqs)
            if (hrow_eval(r, x) > r.b) return false;
        for (const auto& r : impl_->h->eqs)
            if (hrow_eval(r, x) != r.b) return false;
        return true;
    }
    return in_convex_hull(x, impl_->v->points);
}

bool Polytope::is_lattice() const {
    if (is_empty()) return true;
    for (const auto& p : vrep().points)
        for (const auto& c : p)
            if (!rat_is_integer(c)) return false;
    return true;
}

std::vector<Expo> Polytope::integer_vertices() const {
    std::vector<Expo> out;
    for (const auto& p : vrep().points) {
        Expo e(p.size());
        for (size_t j = 0; j < p.size(); ++j) {
            if (!rat_is_integer(p[j]))
                throw std::invalid_argument("polytope has a non-integer vertex");
            e[j] = to_ll(p[j].get_num());
        }
        out.push_back(std::move(e));
    }
    return out;
}

std::optional<IntBox> Polytope::box_hint() const { return impl_->hint; }

IntBox bounding_box(const Polytope& P) {
    const auto& pts = P.vrep().points;
    if (pts.empty()) throw std::invalid_argument("bounding_box: empty polytope");
    int n = P.ambient_dim();
    IntBox box(n);
    for (int j = 0; j < n; ++j) {
        Rat lo = pts[0][j], hi = pts[0][j];
        for (const auto& p : pts) {
            if (p[j] < lo) lo = p[j];
            if (p[j] > hi) hi = p[j];
        }
        box[j] = {to_ll(rat_ceil(lo)), to_ll(rat_floor(hi))};
    }
    return box;
}

Polytope dilate(const Polytope& P, long long k) {
    if (k < 0) throw std::invalid_argument("dilate: negative factor");
    if (P.is_empty()) return P;
    const int n = P.ambient_dim();
    if (k == 0) return Polytope::single_point(RatVec(n, Rat(0)));
    if (k == 1) return P;
    const long kf = static_cast<long>(k);
    std::vector<RatVec> verts;
    for (const auto& p : P.vrep().points) {
        RatVec q(n);
        for (int j = 0; j < n; ++j) q[j] = p[j] * kf;
        verts.push_back(std::move(q));
    }
    HRep h = P.hrep();
    for (auto& r : h.ineqs) r.b *= kf;
    for (auto& r : h.eqs) r.b *= kf;
    return Polytope::from_vertices(n, std::move(verts), std::move(h));
}

Polytope translate(const Polytope& P, const RatVec& v) {
    if (P.is_empty()) return P;
    const int n = P.ambient_dim();
    if (static_cast<int>(v.size()) != n) throw std::invalid_argument("translate: dimension mismatch");
    std::vector<RatVec> verts;
    for (const auto& p : P.vrep().points) {
        RatVec q(n);
        for (int j = 0; j < n; ++j) q[j] = p[j] + v[j];
        verts.push_back(std::move(q));
    }
    HRep h = P.hrep();
    HRep h2;
    for (const auto& r : h.ineqs) {
        RatVec a(n);
        for (int j = 0; j < n; ++j) a[j] = Rat(r.a[j]);
        h2.ineqs.push_back(*normalize_row(a, Rat(r.b) + dot(a, v)));
    }
    for (const auto& r : h.eqs) {
        RatVec a(n);
        for (int j = 0; j < n; ++j) a[j] = Rat(r.a[j]);
        h2.eqs.push_back(canonical_equality(*normalize_row(a, Rat(r.b) + dot(a, v))));
    }
    std::sort(h2.ineqs.begin(), h2.ineqs.end());
    std::sort(h2.eqs.begin(), h2.eqs.end());
    return Polytope::from_vertices(n, std::move(verts), std::move(h2));
}

Polytope minkowski_sum(const Polytope& P, const Polytope& Q) {
    if (P.ambient_dim() != Q.ambient_dim())
        throw std::invalid_argument("minkowski_sum: dimension mismatch");
    if (P.is_empty() || Q.is_empty()) return Polytope::empty(P.ambient_dim());
    if (Q.vrep().points.size() == 1) return translate(P, Q.vrep().points[0]);
    if (P.vrep().points.size() == 1) return translate(Q, P.vrep().points[0]);
    std::vector<RatVec> sums;
    for (const auto& p : P.vrep().points)
        for (const auto& q : Q.vrep().points) {
            RatVec s(p.size());
            for (size_t j = 0; j < s.size(); ++j) s[j] = p[j] + q[j];
            sums.push_back(std::move(s));
        }
    return Polytope::from_points(P.ambient_dim(), std::move(sums));
}

std::vector<Expo> lattice_points(const Polytope& P) {
    std::vector<Expo> out;
    if (P.is_empty()) return out;
    const int n = P.ambient_dim();
    if (n == 0) {
        out.push_back(Expo{});
        return out;
    }
    const HRep& h = P.hrep();
    IntBox box = P.box_hint() ? *P.box_hint() : bounding_box(P);
    for (auto& [lo, hi] : box)
        if (lo > hi) return out;

    struct Row {
        const HRow* r;
        bool eq;
        int last_nz;  // index of the last nonzero coefficient, -1 if none
    };
    std::vector<Row> rows;
    for (const auto& r : h.ineqs) {
        int last = -1;
        for (int j = 0; j < n; ++j)
            if (r.a[j] != 0) last = j;
        rows.push_back({&r, false, last});
    }
    for (const auto& r : h.eqs) {
        int last = -1;
        for (int j = 0; j < n; ++j)
            if (r.a[j] != 0) last = j;
        rows.push_back({&r, true, last});
    }
    // Rows with no variable at all must hold outright.
    for (const auto& row : rows)
        if (row.last_nz < 0) {
            if (row.eq ? (row.r->b != 0) : (row.r->b < 0)) return out;
        }

    std::vector<Int> partial(rows.size(), Int(0));
    Expo point(n, 0);
    std::vector<Int> save;

    auto ok_after = [&](int level) {
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].last_nz != level) continue;
            if (rows[i].eq) {
                if (partial[i] != rows[i].r->b) return false;
            } else {
                if (partial[i] > rows[i].r->b) return false;
            }
        }
        return true;
    };

    // Depth-first scan of the integer box with incremental row sums; a row
    // is decided as soon as its last involved coordinate is fixed.
    auto scan = [&](auto&& self, int level) -> void {
        if (level == n) {
            out.push_back(point);
            return;
        }
        for (long long t = box[level].first; t <= box[level].second; ++t) {
            point[level] = t;
            bool pruned = false;
            std::vector<std::pair<size_t, Int>> touched;
            for (size_t i = 0; i < rows.size(); ++i) {
                const Int& c = rows[i].r->a[level];
                if (c != 0) {
                    touched.push_back({i, partial[i]});
                    partial[i] += c * static_cast<long>(t);
                }
            }
            if (!ok_after(level)) pruned = true;
            if (!pruned) self(self, level + 1);
            for (auto& [i, old] : touched) partial[i] = old;
        }
    };
    scan(scan, 0);
    std::sort(out.begin(), out.end(), GradedLexLess{});
    return out;
}

}  // namespace polyrec
