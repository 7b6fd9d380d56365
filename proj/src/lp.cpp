#include "polyrec/lp.hpp"

#include <stdexcept>

namespace polyrec {

// Dictionary simplex, phase 1 only: minimize the sum of artificial
// variables. Bland's rule on both the entering and leaving choice, so the
// iteration terminates without an anticycling perturbation.
bool lp_feasible_eq_nonneg(const std::vector<RatVec>& A, const RatVec& b) {
    const int m = static_cast<int>(A.size());
    if (m == 0) return true;
    const int n = static_cast<int>(A[0].size());
    if (static_cast<int>(b.size()) != m) throw std::invalid_argument("lp: rhs size mismatch");

    const int cols = n + m;  // structural + artificial
    // tab[i] = row of [A | I | b], with b >= 0 enforced by row negation.
    std::vector<RatVec> tab(m, RatVec(cols + 1, Rat(0)));
    for (int i = 0; i < m; ++i) {
        bool flip = b[i] < 0;
        for (int j = 0; j < n; ++j) tab[i][j] = flip ? Rat(-A[i][j]) : A[i][j];
        tab[i][n + i] = 1;
        tab[i][cols] = flip ? Rat(-b[i]) : b[i];
    }
    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) basis[i] = n + i;

    // Reduced cost row for the phase-1 objective (artificials cost 1).
    RatVec cost(cols + 1, Rat(0));
    for (int j = 0; j < cols + 1; ++j) {
        Rat s = 0;
        for (int i = 0; i < m; ++i) s += tab[i][j];
        Rat c = (j >= n && j < cols) ? Rat(1) : Rat(0);
        cost[j] = c - s;
    }

    while (true) {
        int enter = -1;
        for (int j = 0; j < cols; ++j)
            if (cost[j] < 0) {
                enter = j;
                break;
            }
        if (enter < 0) break;

        int leave = -1;
        Rat best;
        for (int i = 0; i < m; ++i) {
            if (tab[i][enter] <= 0) continue;
            Rat ratio = tab[i][cols] / tab[i][enter];
            if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                best = ratio;
                leave = i;
            }
        }
        if (leave < 0)
            throw std::logic_error("phase-1 objective unbounded");  // cannot happen: w >= 0

        Rat piv = tab[leave][enter];
        for (int j = 0; j <= cols; ++j) tab[leave][j] /= piv;
        for (int i = 0; i < m; ++i) {
            if (i == leave || tab[i][enter] == 0) continue;
            Rat f = tab[i][enter];
            for (int j = 0; j <= cols; ++j) tab[i][j] -= f * tab[leave][j];
        }
        if (cost[enter] != 0) {
            Rat f = cost[enter];
            for (int j = 0; j <= cols; ++j) cost[j] -= f * tab[leave][j];
        }
        basis[leave] = enter;
    }
    // Optimal value of the phase-1 objective is -cost[last].
    return cost[cols] == 0;
}

bool lp_feasible(const LinSys& sys) {
    // Standard form: split free vars x = u - w, slack per inequality.
    const int n = sys.nvars;
    const int mi = static_cast<int>(sys.ineqs.size());
    const int me = static_cast<int>(sys.eqs.size());
    const int cols = 2 * n + mi;
    std::vector<RatVec> A;
    RatVec b;
    A.reserve(mi + me);
    int slack = 0;
    for (const auto& [a, rhs] : sys.ineqs) {
        RatVec row(cols, Rat(0));
        for (int j = 0; j < n; ++j) {
            row[j] = a[j];
            row[n + j] = -a[j];
        }
        row[2 * n + slack++] = 1;
        A.push_back(std::move(row));
        b.push_back(rhs);
    }
    for (const auto& [a, rhs] : sys.eqs) {
        RatVec row(cols, Rat(0));
        for (int j = 0; j < n; ++j) {
            row[j] = a[j];
            row[n + j] = -a[j];
        }
        A.push_back(std::move(row));
        b.push_back(rhs);
    }
    return lp_feasible_eq_nonneg(A, b);
}

bool in_convex_hull(const RatVec& p, const std::vector<RatVec>& pts) {
    if (pts.empty()) return false;
    const int n = static_cast<int>(p.size());
    const int r = static_cast<int>(pts.size());
    // lambda >= 0, sum lambda = 1, sum lambda_i v_i = p
    std::vector<RatVec> A(n + 1, RatVec(r, Rat(0)));
    RatVec b(n + 1, Rat(0));
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(pts[i].size()) != n)
            throw std::invalid_argument("in_convex_hull: dimension mismatch");
        for (int j = 0; j < n; ++j) A[j][i] = pts[i][j];
        A[n][i] = 1;
    }
    for (int j = 0; j < n; ++j) b[j] = p[j];
    b[n] = 1;
    return lp_feasible_eq_nonneg(A, b);
}

}  // namespace polyrec
