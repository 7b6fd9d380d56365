#include "polyrec/schurgt.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace polyrec {

Partition::Partition(std::vector<long long> p) : parts(std::move(p)) {
    for (size_t i = 0; i + 1 < parts.size(); ++i)
        if (parts[i] < parts[i + 1])
            throw std::invalid_argument("partition entries must be weakly decreasing");
    if (!parts.empty() && parts.back() < 0)
        throw std::invalid_argument("partition entries must be nonnegative");
}

long long Partition::size() const {
    long long s = 0;
    for (auto p : parts) s += p;
    return s;
}

int Partition::length() const {
    int l = 0;
    for (auto p : parts)
        if (p > 0) ++l;
    return l;
}

std::vector<long long> Partition::padded(int n) const {
    std::vector<long long> out(parts.begin(), parts.end());
    if (static_cast<int>(out.size()) > n) {
        for (size_t i = n; i < out.size(); ++i)
            if (out[i] != 0) throw std::invalid_argument("partition longer than n");
        out.resize(n);
    }
    out.resize(n, 0);
    return out;
}

bool Partition::contains(const Partition& mu, int n) const {
    auto l = padded(n), m = mu.padded(n);
    for (int i = 0; i < n; ++i)
        if (m[i] > l[i]) return false;
    return true;
}

Partition partition_add(const Partition& a, const Partition& b, long long scale_b, int n) {
    auto pa = a.padded(n), pb = b.padded(n);
    std::vector<long long> out(n);
    for (int i = 0; i < n; ++i) out[i] = pa[i] + scale_b * pb[i];
    return Partition(std::move(out));
}

SkewShape::SkewShape(Partition l, Partition m, int letters) : lambda(std::move(l)), mu(std::move(m)), n(letters) {
    if (n < 1) throw std::invalid_argument("skew shape needs n >= 1");
    if (lambda.length() > n) throw std::invalid_argument("lambda has length > n");
    if (mu.length() > n) throw std::invalid_argument("mu has length > n");
    if (!lambda.contains(mu, n)) throw std::invalid_argument("mu is not contained in lambda");
}

bool GTPattern::valid() const {
    if (rows.empty()) return false;
    const int n = static_cast<int>(rows.size()) - 1;
    for (const auto& row : rows)
        if (static_cast<int>(row.size()) != n) return false;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (rows[i + 1][j] > rows[i][j]) return false;
            if (j + 1 < n && rows[i][j] > rows[i + 1][j + 1]) return false;
        }
    return true;
}

std::vector<long long> GTPattern::weight() const {
    const int n = static_cast<int>(rows.size()) - 1;
    std::vector<long long> w(n);
    for (int i = 0; i < n; ++i) {
        long long a = 0, b = 0;
        for (int j = 0; j < n; ++j) {
            a += rows[i][j];
            b += rows[i + 1][j];
        }
        w[i] = a - b;
    }
    return w;
}

namespace {

std::vector<long long> reversed_padded(const Partition& p, int n) {
    auto v = p.padded(n);
    std::reverse(v.begin(), v.end());
    return v;
}

// Free variable layout: rows 1..n-1 of the array (0-indexed, row 0 = top),
// n entries each; index = (i-1)*n + j.
int free_index(int i, int j, int n) { return (i - 1) * n + j; }

}  // namespace

Polytope gt_polytope(const SkewShape& shape) {
    const int n = shape.n;
    auto top = reversed_padded(shape.lambda, n);
    auto bot = reversed_padded(shape.mu, n);
    const int nfree = (n - 1) * n;

    if (nfree == 0) {
        // Single boundary pair; the polytope is a point when the boundary
        // rows interlace, empty otherwise.
        for (int j = 0; j < n; ++j) {
            if (bot[j] > top[j]) return Polytope::empty(0);
            if (j + 1 < n && top[j] > bot[j + 1]) return Polytope::empty(0);
        }
        return Polytope::single_point(RatVec{});
    }

    HRep h;
    auto add_ineq = [&](std::vector<Int> a, Int b) {
        HRow row;
        row.a = std::move(a);
        row.b = std::move(b);
        h.ineqs.push_back(std::move(row));
    };
    // Interlacing between array rows i and i+1: B[j] <= A[j] <= B[j+1].
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const bool a_const = (i == 0);
            const bool b_const = (i + 1 == n);
            // B[j] - A[j] <= 0
            {
                std::vector<Int> a(nfree, Int(0));
                Int b = 0;
                if (b_const)
                    b -= to_int(bot[j]);
                else
                    a[free_index(i + 1, j, n)] = 1;
                if (a_const)
                    b += to_int(top[j]);
                else
                    a[free_index(i, j, n)] -= 1;
                add_ineq(std::move(a), std::move(b));
            }
            // A[j] - B[j+1] <= 0
            if (j + 1 < n) {
                std::vector<Int> a(nfree, Int(0));
                Int b = 0;
                if (a_const)
                    b -= to_int(top[j]);
                else
                    a[free_index(i, j, n)] = 1;
                if (b_const)
                    b += to_int(bot[j + 1]);
                else
                    a[free_index(i + 1, j + 1, n)] -= 1;
                add_ineq(std::move(a), std::move(b));
            }
        }

    // Column bounds give an exact lattice box: bot[j] <= x_{i,j} <= top[j].
    IntBox hint(nfree);
    for (int i = 1; i < n; ++i)
        for (int j = 0; j < n; ++j) hint[free_index(i, j, n)] = {bot[j], top[j]};
    return Polytope::from_hrep(nfree, std::move(h), std::move(hint));
}

std::vector<RatVec> pattern_rows_from_point(const SkewShape& shape, const RatVec& point) {
    const int n = shape.n;
    auto top = reversed_padded(shape.lambda, n);
    auto bot = reversed_padded(shape.mu, n);
    std::vector<RatVec> rows(n + 1, RatVec(n));
    for (int j = 0; j < n; ++j) {
        rows[0][j] = Rat(static_cast<long>(top[j]));
        rows[n][j] = Rat(static_cast<long>(bot[j]));
    }
    for (int i = 1; i < n; ++i)
        for (int j = 0; j < n; ++j) rows[i][j] = point[free_index(i, j, n)];
    return rows;
}

std::vector<Rat> pattern_weight_rational(const std::vector<RatVec>& rows) {
    const int n = static_cast<int>(rows.size()) - 1;
    std::vector<Rat> w(n);
    for (int i = 0; i < n; ++i) {
        Rat a = 0, b = 0;
        for (int j = 0; j < n; ++j) {
            a += rows[i][j];
            b += rows[i + 1][j];
        }
        w[i] = a - b;
    }
    return w;
}

std::vector<GTPattern> gt_patterns(const SkewShape& shape) {
    const int n = shape.n;
    auto top = reversed_padded(shape.lambda, n);
    auto bot = reversed_padded(shape.mu, n);
    std::vector<GTPattern> out;
    for (const auto& pt : lattice_points(gt_polytope(shape))) {
        GTPattern p;
        p.rows.assign(n + 1, std::vector<long long>(n));
        p.rows[0].assign(top.begin(), top.end());
        p.rows[n].assign(bot.begin(), bot.end());
        for (int i = 1; i < n; ++i)
            for (int j = 0; j < n; ++j) p.rows[i][j] = pt[free_index(i, j, n)];
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<Tableau> ssyt_enumerate(const SkewShape& shape) {
    const int n = shape.n;
    auto lam = shape.lambda.padded(n);
    auto mu = shape.mu.padded(n);
    struct Cell {
        int row, col;
    };
    std::vector<Cell> cells;
    for (int i = 0; i < n; ++i)
        for (long long j = mu[i]; j < lam[i]; ++j) cells.push_back({i, static_cast<int>(j)});

    std::vector<Tableau> out;
    Tableau t(n);
    for (int i = 0; i < n; ++i) t[i].assign(lam[i] - mu[i], 0);

    auto value_at = [&](int row, int col) -> int {
        // 0 when the cell is outside the shape or not yet filled
        if (row < 0 || row >= n) return 0;
        if (col < mu[row] || col >= lam[row]) return 0;
        return t[row][col - mu[row]];
    };
    auto fill = [&](auto&& self, size_t idx) -> void {
        if (idx == cells.size()) {
            out.push_back(t);
            return;
        }
        auto [row, col] = cells[idx];
        int lo = 1;
        int left = value_at(row, col - 1);
        if (left > 0) lo = std::max(lo, left);  // weakly increasing rows
        int up = value_at(row - 1, col);
        if (up > 0) lo = std::max(lo, up + 1);  // strictly increasing columns
        for (int v = lo; v <= n; ++v) {
            t[row][col - mu[row]] = v;
            self(self, idx + 1);
        }
        t[row][col - mu[row]] = 0;
    };
    fill(fill, 0);
    return out;
}

WeightVector tableau_weight(const Tableau& t, int n) {
    WeightVector w(n, 0);
    for (const auto& row : t)
        for (int v : row) {
            if (v < 1 || v > n) throw std::invalid_argument("tableau entry out of range");
            ++w[v - 1];
        }
    return w;
}

Laurent schur_polynomial_ssyt(const SkewShape& shape) {
    Laurent s(shape.n);
    for (const auto& t : ssyt_enumerate(shape)) {
        auto w = tableau_weight(t, shape.n);
        Expo e(w.begin(), w.end());
        s.add_term(e, 1);
    }
    return s;
}

Laurent schur_polynomial(const SkewShape& shape) {
    Laurent via_gt(shape.n);
    for (const auto& p : gt_patterns(shape)) {
        auto w = p.weight();
        Expo e(w.begin(), w.end());
        via_gt.add_term(e, 1);
    }
    Laurent via_ssyt = schur_polynomial_ssyt(shape);
    if (via_gt != via_ssyt)
        throw std::runtime_error(
            "schur_polynomial: Gelfand-Tsetlin and tableau enumerations disagree");
    return via_gt;
}

long long kostka(const SkewShape& shape, const WeightVector& w) {
    if (static_cast<int>(w.size()) != shape.n)
        throw std::invalid_argument("kostka: weight length must equal n");
    Expo e(w.begin(), w.end());
    return to_ll(schur_polynomial(shape).coeff(e));
}

bool dominates(const WeightVector& a, const WeightVector& b) {
    if (a.size() != b.size()) return false;
    long long sa = 0, sb = 0;
    for (auto v : a) sa += v;
    for (auto v : b) sb += v;
    if (sa != sb) return false;
    long long pa = 0, pb = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        pa += a[i];
        pb += b[i];
        if (pa < pb) return false;
    }
    return true;
}

namespace {

WeightVector sorted_desc(WeightVector v) {
    std::sort(v.rbegin(), v.rend());
    return v;
}

}  // namespace

std::vector<WeightVector> conjecture_W(const SkewShape& shape) {
    const int n = shape.n;
    auto lam = shape.lambda.padded(n);
    auto mu = shape.mu.padded(n);
    WeightVector diff(n);
    for (int i = 0; i < n; ++i) diff[i] = lam[i] - mu[i];
    WeightVector diff_bar = sorted_desc(diff);

    std::vector<WeightVector> out;
    Laurent s = schur_polynomial(shape);
    for (const auto& [e, c] : s.terms()) {
        WeightVector w(e.begin(), e.end());
        if (dominates(sorted_desc(w), diff_bar)) out.push_back(std::move(w));
    }
    std::sort(out.begin(), out.end());
    return out;
}

VertexWeights vertex_weights(const SkewShape& shape) {
    VertexWeights out;
    Polytope gl = gt_polytope(shape);
    if (gl.is_empty()) return out;
    out.vertices = gl.vrep().points;
    for (const auto& v : out.vertices) {
        bool integral = true;
        for (const auto& c : v)
            if (!rat_is_integer(c)) {
                integral = false;
                break;
            }
        if (!integral) {
            out.nonintegral_vertices.push_back(v);
            continue;
        }
        auto w = pattern_weight_rational(pattern_rows_from_point(shape, v));
        WeightVector wi(w.size());
        for (size_t i = 0; i < w.size(); ++i) wi[i] = to_ll(w[i].get_num());
        out.integral_weights.push_back(std::move(wi));
    }
    std::sort(out.integral_weights.begin(), out.integral_weights.end());
    return out;
}

CounterexampleReport counterexample_report(const SkewShape& shape) {
    CounterexampleReport rep;
    rep.shape = shape;
    rep.W = conjecture_W(shape);
    rep.vw = vertex_weights(shape);
    for (const auto& w : rep.W)
        if (!std::binary_search(rep.vw.integral_weights.begin(), rep.vw.integral_weights.end(), w))
            rep.missing.push_back(w);
    // Finding every member of W among the integral vertex weights is enough
    // for divisibility; a sound refutation additionally needs the vertex
    // factor multiset to be complete, i.e. no vertex was excluded.
    rep.divides = rep.missing.empty();
    rep.refuted = !rep.missing.empty() && rep.vw.nonintegral_vertices.empty();
    return rep;
}

long long corollary_r(const Partition& kappa, const Partition& lambda, const Partition& mu,
                      const Partition& nu, int n) {
    std::vector<long long> f, g;
    for (auto v : lambda.padded(n)) f.push_back(v);
    for (auto v : mu.padded(n)) f.push_back(v);
    for (auto v : kappa.padded(n)) g.push_back(v);
    for (auto v : nu.padded(n)) g.push_back(v);
    long long r = 1;
    for (size_t i = 0; i < f.size(); ++i)
        for (size_t j = 0; j < f.size(); ++j) {
            if (f[i] >= f[j]) continue;
            // need r (f_j - f_i) > g_i - g_j
            long long num = g[i] - g[j], den = f[j] - f[i];
            long long need = num >= 0 ? num / den + 1 : 1;
            r = std::max(r, need);
        }
    return r;
}

bool gt_minkowski_check(const Partition& kappa, const Partition& lambda, const Partition& mu,
                        const Partition& nu, int n, long long r, long long l) {
    if (l < r) throw std::invalid_argument("gt_minkowski_check: requires l >= r");
    if (!lambda.contains(mu, n))
        throw std::invalid_argument("gt_minkowski_check: lambda must contain mu");
    long long want = corollary_r(kappa, lambda, mu, nu, n);
    if (r < want)
        throw std::invalid_argument("gt_minkowski_check: r violates the sorted-order condition");

    SkewShape at_l(partition_add(kappa, lambda, l, n), partition_add(nu, mu, l, n), n);
    SkewShape at_r(partition_add(kappa, lambda, r, n), partition_add(nu, mu, r, n), n);
    SkewShape base(lambda, mu, n);

    Polytope direct = gt_polytope(at_l);
    Polytope sum = minkowski_sum(gt_polytope(at_r), dilate(gt_polytope(base), l - r));
    return direct.vrep() == sum.vrep();
}

SchurRecursionResult schur_recursion_check(const Partition& kappa, const Partition& lambda,
                                           const Partition& mu, const Partition& nu, int n,
                                           long long l_max, long long l_start) {
    SchurRecursionResult res;
    res.r_used = corollary_r(kappa, lambda, mu, nu, n);
    res.l_start = l_start >= 0 ? l_start : res.r_used;
    res.l_max = l_max;

    SkewShape base(lambda, mu, n);
    VertexWeights vw = vertex_weights(base);
    if (!vw.nonintegral_vertices.empty())
        throw std::invalid_argument(
            "schur_recursion_check: GT polytope has non-integral vertices; "
            "the vertex-weight recursion is not available");
    res.order = static_cast<int>(vw.integral_weights.size());
    res.vertex_weight_roots = vw.integral_weights;
    if (l_max < res.l_start + res.order)
        throw std::invalid_argument("schur_recursion_check: l_max too small for the order");

    // Vertex weights, with multiplicity, must appear among the tableau
    // weights: every integral vertex is a lattice point.
    {
        std::vector<WeightVector> tabw;
        for (const auto& p : gt_patterns(base)) tabw.push_back(p.weight());
        std::sort(tabw.begin(), tabw.end());
        res.roots_are_tableau_weights = true;
        auto it = tabw.begin();
        for (const auto& w : vw.integral_weights) {
            it = std::lower_bound(it, tabw.end(), w);
            if (it == tabw.end() || *it != w) {
                res.roots_are_tableau_weights = false;
                break;
            }
            ++it;
        }
    }

    std::vector<Expo> roots;
    for (const auto& w : vw.integral_weights) roots.push_back(Expo(w.begin(), w.end()));
    std::vector<Laurent> coeffs;
    for (int j = 0; j <= res.order; ++j) {
        Laurent e = elementary_symmetric(roots, j);
        coeffs.push_back(j % 2 == 0 ? e : -e);
    }

    std::vector<Laurent> seq;
    for (long long l = res.l_start; l <= l_max; ++l) {
        SkewShape sh(partition_add(kappa, lambda, l, n), partition_add(nu, mu, l, n), n);
        seq.push_back(schur_polynomial(sh));
    }

    res.holds = true;
    for (long long l = 0; l + res.order < static_cast<long long>(seq.size()); ++l) {
        Laurent acc(n);
        for (int j = 0; j <= res.order; ++j) acc += coeffs[j] * seq[l + res.order - j];
        if (!acc.is_zero()) {
            res.holds = false;
            res.failed_l = res.l_start + l;
            break;
        }
    }
    return res;
}

}  // namespace polyrec
