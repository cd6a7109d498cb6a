#ifndef OREHERMITE_LINSOLVE_HPP
#define OREHERMITE_LINSOLVE_HPP

#include <vector>

#include "orehermite/matrix.hpp"
#include "orehermite/ratfun.hpp"

namespace oreh {

/// Result of one exact elimination over Q(z): the rank of the coefficient
/// matrix, per-right-hand-side consistency, and (when the system is square
/// of full column rank) the unique solutions.
struct LinearSolveResult {
    int rank = 0;
    bool full_column_rank = false;
    std::vector<bool> consistent;  // one flag per rhs column
    Matrix<RatFun> solution;       // cols match rhs; valid when full_column_rank && consistent
};

/// Solve A x = b for each column b of B by exact Gaussian elimination over
/// Q(z), with partial pivoting on the nonzero candidate of minimal z-degree.
/// One factorization serves the rank test, consistency tests, and solve.
inline LinearSolveResult solve_exact(const Matrix<RatFun>& a, const Matrix<RatFun>& b) {
    int m = a.rows(), n = a.cols(), k = b.cols();
    Matrix<RatFun> w(m, n + k);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) w(i, j) = a(i, j);
        for (int j = 0; j < k; ++j) w(i, n + j) = b(i, j);
    }

    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < n && r < m; ++c) {
        int piv = -1;
        Deg best = Deg::neg_inf();
        for (int i = r; i < m; ++i) {
            if (w(i, c).is_zero()) continue;
            Deg d = w(i, c).deg_z();
            if (piv < 0 || d < best) {
                piv = i;
                best = d;
            }
        }
        if (piv < 0) continue;
        w.swap_rows(r, piv);
        pivot_col.push_back(c);
        const RatFun inv = w(r, c).inverse();
        for (int j = c; j < n + k; ++j) w(r, j) *= inv;
        for (int i = r + 1; i < m; ++i) {
            if (w(i, c).is_zero()) continue;
            RatFun f = w(i, c);
            for (int j = c; j < n + k; ++j) {
                if (w(r, j).is_zero()) continue;
                w(i, j) -= f * w(r, j);
            }
        }
        ++r;
    }

    LinearSolveResult res;
    res.rank = r;
    res.full_column_rank = (r == n);
    res.consistent.assign(k, true);
    for (int col = 0; col < k; ++col)
        for (int i = r; i < m; ++i)
            if (!w(i, n + col).is_zero()) {
                res.consistent[col] = false;
                break;
            }

    if (res.full_column_rank) {
        // Every column holds a pivot; back-substitute each rhs.
        res.solution = Matrix<RatFun>(n, k);
        for (int col = 0; col < k; ++col) {
            if (!res.consistent[col]) continue;
            for (int i = n - 1; i >= 0; --i) {
                RatFun v = w(i, n + col);
                for (int j = i + 1; j < n; ++j) {
                    if (w(i, j).is_zero() || res.solution(j, col).is_zero()) continue;
                    v -= w(i, j) * res.solution(j, col);
                }
                res.solution(i, col) = v;  // pivot already scaled to 1
            }
        }
    }
    return res;
}

}  // namespace oreh

#endif
