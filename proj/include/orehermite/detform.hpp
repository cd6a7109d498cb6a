#ifndef OREHERMITE_DETFORM_HPP
#define OREHERMITE_DETFORM_HPP

#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

#include "orehermite/matrix.hpp"
#include "orehermite/skewfrac.hpp"

namespace oreh {

using SkewMatrix = Matrix<SkewFraction>;
using OreMatrix = Matrix<OrePoly>;

inline RingRef matrix_ring(const OreMatrix& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m(i, j).ring()) return m(i, j).ring();
    return nullptr;
}

inline RingRef matrix_ring(const SkewMatrix& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m(i, j).ring()) return m(i, j).ring();
    return nullptr;
}

/// Embed an Ore polynomial matrix into the skew quotient field.
inline SkewMatrix embed(const OreMatrix& m) {
    RingRef ring = matrix_ring(m);
    SkewMatrix s(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            s(i, j) = SkewFraction(m(i, j).ring() ? m(i, j) : OrePoly::zero(ring));
    return s;
}

/// Quasideterminant value; undefined is a value, not an error (it maps to a
/// zero entry of the inverse).
struct QdResult {
    bool defined = false;
    SkewFraction value;

    static QdResult undefined() { return {}; }
    static QdResult of(SkewFraction v) { return {true, std::move(v)}; }
};

namespace detail {

// Memoized over (row subset, column subset, p, q); subsets as bitmasks of
// original indices.
class QuasidetEvaluator {
public:
    explicit QuasidetEvaluator(const SkewMatrix& m) : m_(m) {}

    QdResult eval(std::uint32_t rowmask, std::uint32_t colmask, int p, int q) {
        auto key = std::make_tuple(rowmask, colmask, p, q);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;

        std::vector<int> rows, cols;
        for (int i = 0; i < m_.rows(); ++i)
            if (rowmask >> i & 1) rows.push_back(i);
        for (int j = 0; j < m_.cols(); ++j)
            if (colmask >> j & 1) cols.push_back(j);

        QdResult res;
        if (rows.size() == 1) {
            res = QdResult::of(m_(p, q));
        } else {
            std::uint32_t subrows = rowmask & ~(std::uint32_t(1) << p);
            std::uint32_t subcols = colmask & ~(std::uint32_t(1) << q);
            // The sum runs over summands with |A^(pq)|_ji defined; those are
            // exactly the nonzero entries of (A^(pq))^-1 when the minor is
            // invertible.  Invertibility is tested by the quasideterminant
            // characterization: every defined inner value is nonzero, and
            // every row and column of the minor carries a defined one.
            bool invertible = true;
            std::vector<bool> row_cov, col_cov;
            std::vector<int> subr, subc;
            for (int j : rows)
                if (j != p) subr.push_back(j);
            for (int i : cols)
                if (i != q) subc.push_back(i);
            row_cov.assign(subr.size(), false);
            col_cov.assign(subc.size(), false);
            SkewFraction sum = SkewFraction::zero(matrix_ring(m_));
            bool all_undefined = true;
            for (size_t ci = 0; ci < subc.size() && invertible; ++ci) {
                for (size_t rj = 0; rj < subr.size() && invertible; ++rj) {
                    int i = subc[ci], j = subr[rj];
                    QdResult inner = eval(subrows, subcols, j, i);
                    if (!inner.defined) continue;
                    all_undefined = false;
                    if (inner.value.is_zero()) {
                        invertible = false;
                        break;
                    }
                    row_cov[rj] = col_cov[ci] = true;
                    sum += m_(p, i) * inner.value.inverse() * m_(j, q);
                }
            }
            for (bool b : row_cov) invertible = invertible && b;
            for (bool b : col_cov) invertible = invertible && b;
            if (all_undefined || !invertible) {
                res = QdResult::undefined();
            } else {
                res = QdResult::of(m_(p, q) - sum);
            }
        }
        memo_[key] = res;
        return res;
    }

private:
    const SkewMatrix& m_;
    std::map<std::tuple<std::uint32_t, std::uint32_t, int, int>, QdResult> memo_;
};

}  // namespace detail

/// |M|_pq, the (p, q)-quasideterminant (0-based indices).
inline QdResult quasidet(const SkewMatrix& m, int p, int q) {
    if (!m.square()) throw math_error("quasideterminant requires a square matrix");
    if (m.rows() > 31) throw math_error("quasideterminant recursion limited to n <= 31");
    detail::QuasidetEvaluator ev(m);
    std::uint32_t full_r = (std::uint32_t(1) << m.rows()) - 1;
    std::uint32_t full_c = (std::uint32_t(1) << m.cols()) - 1;
    return ev.eval(full_r, full_c, p, q);
}

/// Inverse over the skew field by Gaussian elimination; throws if singular.
inline SkewMatrix skew_inverse(const SkewMatrix& m) {
    if (!m.square()) throw math_error("inverse requires a square matrix");
    int n = m.rows();
    RingRef ring = matrix_ring(m);
    SkewMatrix a = m;
    SkewMatrix b(n, n, SkewFraction::zero(ring));
    for (int i = 0; i < n; ++i) b(i, i) = SkewFraction::one(ring);

    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (!a(r, c).is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) throw math_error("matrix not invertible over skew field");
        a.swap_rows(c, piv);
        b.swap_rows(c, piv);
        SkewFraction inv = a(c, c).inverse();
        for (int j = 0; j < n; ++j) {
            a(c, j) = inv * a(c, j);
            b(c, j) = inv * b(c, j);
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || a(r, c).is_zero()) continue;
            SkewFraction f = a(r, c);
            for (int j = 0; j < n; ++j) {
                a(r, j) -= f * a(c, j);
                b(r, j) -= f * b(c, j);
            }
        }
    }
    return b;
}

/// Degree of the Dieudonne determinant: the sum of the fraction degrees of
/// the Bruhat elimination pivots; -inf when rank deficient.  Pivots are
/// chosen nonzero of minimal fraction degree.
inline Deg ddet_degree(const SkewMatrix& m) {
    if (!m.square()) throw math_error("determinantal degree requires a square matrix");
    int n = m.rows();
    SkewMatrix a = m;
    std::vector<bool> row_used(n, false), col_used(n, false);
    Deg total(0);
    for (int step = 0; step < n; ++step) {
        int pi = -1, pj = -1;
        Deg best = Deg::neg_inf();
        for (int i = 0; i < n; ++i) {
            if (row_used[i]) continue;
            for (int j = 0; j < n; ++j) {
                if (col_used[j] || a(i, j).is_zero()) continue;
                Deg d = a(i, j).deg();
                if (pi < 0 || d < best) {
                    pi = i;
                    pj = j;
                    best = d;
                }
            }
        }
        if (pi < 0) return Deg::neg_inf();
        total = total + best;
        SkewFraction pinv = a(pi, pj).inverse();
        for (int i = 0; i < n; ++i) {
            if (row_used[i] || i == pi || a(i, pj).is_zero()) continue;
            SkewFraction f = a(i, pj) * pinv;
            for (int j = 0; j < n; ++j) {
                if (col_used[j]) continue;
                a(i, j) -= f * a(pi, j);
            }
        }
        row_used[pi] = true;
        col_used[pj] = true;
    }
    return total;
}


inline int skew_rank(const SkewMatrix& m) {
    SkewMatrix a = m;
    int rows = a.rows(), cols = a.cols();
    std::vector<bool> row_used(rows, false), col_used(cols, false);
    int rank = 0;
    for (;;) {
        int pi = -1, pj = -1;
        Deg best = Deg::neg_inf();
        for (int i = 0; i < rows; ++i) {
            if (row_used[i]) continue;
            for (int j = 0; j < cols; ++j) {
                if (col_used[j] || a(i, j).is_zero()) continue;
                Deg d = a(i, j).deg();
                if (pi < 0 || d < best) {
                    pi = i;
                    pj = j;
                    best = d;
                }
            }
        }
        if (pi < 0) return rank;
        ++rank;
        SkewFraction pinv = a(pi, pj).inverse();
        for (int i = 0; i < rows; ++i) {
            if (row_used[i] || i == pi || a(i, pj).is_zero()) continue;
            SkewFraction f = a(i, pj) * pinv;
            for (int j = 0; j < cols; ++j) {
                if (col_used[j]) continue;
                a(i, j) -= f * a(pi, j);
            }
        }
        row_used[pi] = true;
        col_used[pj] = true;
    }
}

}  // namespace oreh

#endif
