#include "gitstab/lp.hpp"

#include <stdexcept>

namespace gitstab {

namespace {

struct Tableau {
    // rows 0..m-1 constraints, row m objective (reduced costs, maximization form:
    // obj[j] = c_j - z_j, rhs holds -value).
    std::vector<std::vector<Rational>> t;
    std::vector<std::size_t> basis;
    std::size_t m = 0;
    std::size_t n = 0;  // variable columns; rhs at index n

    void pivot(std::size_t r, std::size_t col)
    {
        Rational inv = 1 / t[r][col];
        for (auto& x : t[r])
            x *= inv;
        for (std::size_t i = 0; i <= m; ++i) {
            if (i == r || t[i][col] == 0)
                continue;
            Rational f = t[i][col];
            for (std::size_t j = 0; j <= n; ++j)
                if (t[r][j] != 0)
                    t[i][j] -= f * t[r][j];
        }
        basis[r] = col;
    }

    // Returns false when unbounded. allowed[j] false excludes column j from entering.
    bool optimize(const std::vector<bool>& allowed)
    {
        for (;;) {
            std::size_t enter = n;
            for (std::size_t j = 0; j < n; ++j)
                if (allowed[j] && t[m][j] > 0) {
                    enter = j;
                    break;
                }
            if (enter == n)
                return true;
            std::size_t leave = m;
            Rational best;
            for (std::size_t i = 0; i < m; ++i) {
                if (t[i][enter] <= 0)
                    continue;
                Rational ratio = t[i][n] / t[i][enter];
                if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == m)
                return false;
            pivot(leave, enter);
        }
    }

    void set_objective(const std::vector<Rational>& cost)
    {
        for (std::size_t j = 0; j <= n; ++j)
            t[m][j] = j < n ? cost[j] : Rational(0);
        for (std::size_t i = 0; i < m; ++i) {
            const Rational& cb = cost[basis[i]];
            if (cb == 0)
                continue;
            for (std::size_t j = 0; j <= n; ++j)
                t[m][j] -= cb * t[i][j];
        }
    }
};

}  // namespace

LpResult solve_lp(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b,
                  const std::vector<Rational>& c)
{
    const std::size_t m = A.size();
    const std::size_t nv = c.size();
    if (b.size() != m)
        throw std::invalid_argument("lp: rhs length mismatch");
    for (const auto& row : A)
        if (row.size() != nv)
            throw std::invalid_argument("lp: constraint width mismatch");

    Tableau tb;
    tb.m = m;
    tb.n = nv + m;
    tb.t.assign(m + 1, std::vector<Rational>(tb.n + 1));
    tb.basis.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        bool neg = b[i] < 0;
        for (std::size_t j = 0; j < nv; ++j)
            tb.t[i][j] = neg ? Rational(-A[i][j]) : A[i][j];
        tb.t[i][nv + i] = 1;
        tb.t[i][tb.n] = neg ? Rational(-b[i]) : b[i];
        tb.basis[i] = nv + i;
    }

    // Phase 1: maximize -(sum of artificials).
    std::vector<Rational> phase1(tb.n);
    for (std::size_t i = 0; i < m; ++i)
        phase1[nv + i] = -1;
    tb.set_objective(phase1);
    std::vector<bool> all(tb.n, true);
    tb.optimize(all);
    LpResult res;
    if (tb.t[m][tb.n] != 0) {
        res.status = LpStatus::Infeasible;
        return res;
    }
    // Drive artificials out of the basis; rows where that fails are redundant.
    for (std::size_t i = 0; i < tb.m; ++i) {
        if (tb.basis[i] < nv)
            continue;
        std::size_t col = nv;
        for (std::size_t j = 0; j < nv; ++j)
            if (tb.t[i][j] != 0) {
                col = j;
                break;
            }
        if (col < nv)
            tb.pivot(i, col);
    }
    std::vector<bool> original(tb.n, false);
    for (std::size_t j = 0; j < nv; ++j)
        original[j] = true;
    std::vector<Rational> phase2(tb.n);
    for (std::size_t j = 0; j < nv; ++j)
        phase2[j] = c[j];
    tb.set_objective(phase2);
    if (!tb.optimize(original)) {
        res.status = LpStatus::Unbounded;
        return res;
    }
    res.status = LpStatus::Optimal;
    res.value = -tb.t[m][tb.n];
    res.x.assign(nv, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        if (tb.basis[i] < nv)
            res.x[tb.basis[i]] = tb.t[i][tb.n];
    return res;
}

}  // namespace gitstab
