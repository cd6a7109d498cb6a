#ifndef OREHERMITE_HERMITE_HPP
#define OREHERMITE_HERMITE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orehermite/detform.hpp"
#include "orehermite/linsolve.hpp"

namespace oreh {

struct HermitePair {
    OreMatrix h;
    OreMatrix u;
};

inline OreMatrix ore_identity(int n, const RingRef& ring) {
    OreMatrix m(n, n, OrePoly::zero(ring));
    for (int i = 0; i < n; ++i) m(i, i) = OrePoly::one(ring);
    return m;
}

inline OreMatrix ore_mat_mul(const OreMatrix& a, const OreMatrix& b) {
    if (a.cols() != b.rows()) throw math_error("matrix dimension mismatch");
    RingRef ring = matrix_ring(a) ? matrix_ring(a) : matrix_ring(b);
    OreMatrix c(a.rows(), b.cols(), OrePoly::zero(ring));
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (int j = 0; j < b.cols(); ++j) {
                if (b(k, j).is_zero()) continue;
                c(i, j) = c(i, j) + a(i, k) * b(k, j);
            }
        }
    return c;
}

inline bool ore_mat_is_zero(const OreMatrix& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) return false;
    return true;
}

/// Max deg_D over entries; 0 for the zero matrix.
inline int matrix_degree(const OreMatrix& m) {
    int d = 0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) d = std::max(d, m(i, j).degree());
    return d;
}

/// Leading (first nonzero) column index of a row, or -1 if the row is zero.
inline int row_lead(const OreMatrix& m, int i) {
    for (int j = 0; j < m.cols(); ++j)
        if (!m(i, j).is_zero()) return j;
    return -1;
}

/// Hermite shape conditions (i)-(iv): nonzero rows first, echelon leading
/// columns, monic leading entries dominating their column in degree.
inline bool is_hermite_shape(const OreMatrix& h) {
    int r = 0;
    int prev_lead = -1;
    for (int i = 0; i < h.rows(); ++i) {
        int lead = row_lead(h, i);
        if (lead < 0) {
            // Everything below a zero row must be zero.
            for (int k = i; k < h.rows(); ++k)
                if (row_lead(h, k) >= 0) return false;
            break;
        }
        if (lead <= prev_lead) return false;
        if (!h(i, lead).is_monic()) return false;
        for (int k = 0; k < i; ++k)
            if (h(k, lead).deg() >= h(i, lead).deg()) return false;
        prev_lead = lead;
        ++r;
    }
    return true;
}

inline int hermite_rank(const OreMatrix& h) {
    int r = 0;
    for (int i = 0; i < h.rows(); ++i)
        if (row_lead(h, i) >= 0) ++r;
    return r;
}

struct HermiteNaiveResult {
    HermitePair pair;
    int rank = 0;
};

/// Classical Euclidean elimination: embedded 2x2 GCRD transforms kill the
/// subdiagonal column by column, then off-diagonal entries are reduced by
/// right division.  Handles any shape and rank.
inline HermiteNaiveResult hermite_naive(const OreMatrix& a_in) {
    int m = a_in.rows(), n = a_in.cols();
    RingRef ring = matrix_ring(a_in);
    OreMatrix a = a_in;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            if (!a(i, j).ring()) a(i, j) = OrePoly::zero(ring);
    OreMatrix u = ore_identity(m, ring);

    // Rescaling a row of [A | U] by a unit of Q(z) is unimodular; doing it
    // after every transform keeps rational-function growth in check.
    auto normalize_row = [&](int i) {
        std::vector<const OrePoly*> ptrs;
        for (int j = 0; j < n; ++j) ptrs.push_back(&a(i, j));
        for (int j = 0; j < m; ++j) ptrs.push_back(&u(i, j));
        UPoly num_gcd;
        UPoly den_lcm = UPoly::one();
        for (const OrePoly* p : ptrs)
            for (int k = 0; k <= p->degree(); ++k) {
                const RatFun& x = p->coeff(k);
                if (x.is_zero()) continue;
                if (num_gcd.degree() != 0) num_gcd = UPoly::gcd(num_gcd, x.num());
                if (x.den().degree() > 0) {
                    UPoly g = UPoly::gcd(den_lcm, x.den());
                    den_lcm = den_lcm * UPoly::divrem(x.den(), g).first;
                }
            }
        if (num_gcd.is_zero()) return;
        RatFun s(den_lcm, num_gcd);
        if (s.is_one()) return;
        for (int j = 0; j < n; ++j) a(i, j) = s * a(i, j);
        for (int j = 0; j < m; ++j) u(i, j) = s * u(i, j);
    };

    auto swap_both = [&](int i, int j) {
        a.swap_rows(i, j);
        u.swap_rows(i, j);
    };

    int r = 0;
    std::vector<std::pair<int, int>> pivots;  // (row, leading column)
    for (int c = 0; c < n && r < m; ++c) {
        int piv = -1;
        for (int i = r; i < m; ++i)
            if (!a(i, c).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        swap_both(r, piv);
        for (int q = r + 1; q < m; ++q) {
            // The right-division Euclidean cascade on (a_rc, a_qc), played
            // out on whole rows one quotient step at a time; the pivot row
            // ends up holding a gcrd of the column below it.
            while (!a(q, c).is_zero()) {
                if (a(q, c).degree() < a(r, c).degree()) {
                    swap_both(r, q);
                    continue;
                }
                int k = a(q, c).degree() - a(r, c).degree();
                RatFun coef = a(q, c).lc() / a(q, c).sigma_pow(a(r, c).lc(), k);
                OrePoly t = OrePoly::monomial(ring, coef, k);
                for (int j = 0; j < n; ++j) a(q, j) = a(q, j) - t * a(r, j);
                for (int j = 0; j < m; ++j) u(q, j) = u(q, j) - t * u(r, j);
                normalize_row(q);
            }
        }
        pivots.emplace_back(r, c);
        ++r;
    }

    // Reduce entries above each pivot, left to right; rows keep polynomial
    // content until the final monic scaling so divisions stay cheap.
    for (auto [pr, pc] : pivots) {
        for (int q = 0; q < pr; ++q) {
            if (a(q, pc).deg() < a(pr, pc).deg()) continue;
            OrePoly quot = OrePoly::right_divmod(a(q, pc), a(pr, pc)).first;
            for (int j = 0; j < n; ++j) a(q, j) = a(q, j) - quot * a(pr, j);
            for (int j = 0; j < m; ++j) u(q, j) = u(q, j) - quot * u(pr, j);
            normalize_row(q);
        }
    }
    for (auto [pr, pc] : pivots) {
        if (a(pr, pc).is_monic()) continue;
        RatFun s = a(pr, pc).lc().inverse();
        for (int j = 0; j < n; ++j) a(pr, j) = s * a(pr, j);
        for (int j = 0; j < m; ++j) u(pr, j) = s * u(pr, j);
    }
    return {HermitePair{std::move(a), std::move(u)}, r};
}

/// Degree of the Dieudonne determinant of a polynomial matrix.  Euclidean
/// triangularization is unimodular, so the degree is the diagonal degree sum
/// of the Hermite form; -inf when rank deficient.  This stays in polynomial
/// arithmetic, unlike the skew-field pivot elimination on embedded matrices,
/// which blows up on dense inputs.
inline Deg ddet_degree(const OreMatrix& m) {
    if (!m.square()) throw math_error("determinantal degree requires a square matrix");
    HermiteNaiveResult r = hermite_naive(m);
    if (r.rank < m.rows()) return Deg::neg_inf();
    int s = 0;
    for (int i = 0; i < m.rows(); ++i) s += r.pair.h(i, i).degree();
    return Deg(s);
}

inline int rank(const OreMatrix& m) { return hermite_naive(m).rank; }

/// Unimodular iff deg Ddet = 0.
inline bool is_unimodular(const OreMatrix& m) {
    if (!m.square()) return false;
    return ddet_degree(m) == Deg(0);
}

/// The coefficient-matrix embedding of the Hermite system: block (i, j) of
/// A-hat is the multiplication matrix whose row t holds the coefficients of
/// D^t * A_ij; columns of block j with power below d_j carry no constraint
/// and are dropped.
struct ReducedSystem {
    Matrix<RatFun> a_tilde;                     // n(rho+1) x M
    Matrix<RatFun> g_tilde;                     // n x M, the unit/zero pattern
    std::vector<std::pair<int, int>> col_map;   // retained (block j, power k), k >= d_j
    int rho = 0;
    int dmax = 0;
};

inline ReducedSystem build_reduced_system(const OreMatrix& a, const std::vector<int>& d,
                                          int rho_override = -1) {
    if (!a.square()) throw math_error("reduced system requires a square matrix");
    int n = a.rows();
    if (static_cast<int>(d.size()) != n) throw math_error("degree sequence size mismatch");
    RingRef ring = matrix_ring(a);
    int dmax = matrix_degree(a);
    int dtop = 0;
    for (int v : d) {
        if (v < 0) throw math_error("degree sequence entries must be non-negative");
        dtop = std::max(dtop, v);
    }
    int rho = rho_override >= 0 ? rho_override : (n - 1) * dmax + dtop;

    ReducedSystem sys;
    sys.rho = rho;
    sys.dmax = dmax;
    for (int j = 0; j < n; ++j)
        for (int k = d[j]; k <= rho + dmax; ++k) sys.col_map.emplace_back(j, k);
    int mcols = static_cast<int>(sys.col_map.size());

    sys.a_tilde = Matrix<RatFun>(n * (rho + 1), mcols);
    sys.g_tilde = Matrix<RatFun>(n, mcols);

    for (int i = 0; i < n; ++i) {
        // D^t applied to the whole row of A at once, incrementally.
        std::vector<OrePoly> row(n);
        for (int j = 0; j < n; ++j) row[j] = a(i, j).ring() ? a(i, j) : OrePoly::zero(ring);
        for (int t = 0; t <= rho; ++t) {
            if (t > 0)
                for (int j = 0; j < n; ++j) row[j] = row[j].times_d_on_left();
            for (int col = 0; col < mcols; ++col) {
                auto [j, k] = sys.col_map[col];
                sys.a_tilde(i * (rho + 1) + t, col) = row[j].coeff(k);
            }
        }
    }
    for (int i = 0; i < n; ++i)
        for (int col = 0; col < mcols; ++col) {
            auto [j, k] = sys.col_map[col];
            sys.g_tilde(i, col) = (j == i && k == d[i]) ? RatFun::one() : RatFun::zero();
        }
    return sys;
}

enum class TrichotomyKind { StrictlyDominates, NotDominates, Exact };

struct Trichotomy {
    TrichotomyKind kind;
    std::optional<HermitePair> pair;  // engaged iff kind == Exact
};

inline std::vector<int> diag_degrees(const OreMatrix& h) {
    std::vector<int> d(h.rows());
    for (int i = 0; i < h.rows(); ++i) d[i] = h(i, i).is_zero() ? -1 : h(i, i).degree();
    return d;
}

/// One probe of the linear-system method for a guessed diagonal degree
/// sequence.  Inconsistency means the guess undershoots somewhere; a
/// rank-deficient but consistent system means it strictly dominates; a
/// unique solution reconstructs U = T and H = T A, verified before return.
inline Trichotomy hermite_given_degrees(const OreMatrix& a, const std::vector<int>& d,
                                        int rho_override = -1) {
    ReducedSystem sys = build_reduced_system(a, d, rho_override);
    int n = a.rows();
    int unknowns = n * (sys.rho + 1);

    LinearSolveResult sol = solve_exact(sys.a_tilde.transposed(), sys.g_tilde.transposed());
    for (bool c : sol.consistent)
        if (!c) return {TrichotomyKind::NotDominates, std::nullopt};
    if (!sol.full_column_rank || sol.rank < unknowns)
        return {TrichotomyKind::StrictlyDominates, std::nullopt};

    RingRef ring = matrix_ring(a);
    OreMatrix u(n, n, OrePoly::zero(ring));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<RatFun> coeffs(sys.rho + 1);
            for (int t = 0; t <= sys.rho; ++t) coeffs[t] = sol.solution(j * (sys.rho + 1) + t, i);
            u(i, j) = OrePoly(ring, std::move(coeffs));
        }
    OreMatrix h = ore_mat_mul(u, a);
    if (!is_hermite_shape(h) || diag_degrees(h) != d)
        throw math_error("rank deficiency or bad input");
    return {TrichotomyKind::Exact, HermitePair{std::move(h), std::move(u)}};
}

namespace detail {

struct DegreeSearchResult {
    std::vector<int> degrees;
    std::optional<HermitePair> pair;
};

/// Component-wise monotone-boundary search of the degree sequence with
/// exact probes: coordinate k is the minimal consistent value with the
/// discovered prefix held fixed and the suffix at the upper bound.
inline DegreeSearchResult find_degree_sequence_impl(const OreMatrix& a, int bound = -1) {
    if (!a.square()) throw math_error("degree-sequence search requires a square matrix");
    int n = a.rows();
    if (bound < 0) bound = n * matrix_degree(a);
    std::vector<int> d(n, bound);
    DegreeSearchResult out;
    for (int k = 0; k < n; ++k) {
        int lo = 0, hi = bound;
        // The suffix sits at the upper bound, so hi is always consistent.
        while (lo < hi) {
            int mid = lo + (hi - lo) / 2;
            d[k] = mid;
            Trichotomy t = hermite_given_degrees(a, d);
            if (t.kind == TrichotomyKind::Exact) {
                out.degrees = d;
                out.pair = std::move(t.pair);
                return out;
            }
            if (t.kind == TrichotomyKind::NotDominates)
                lo = mid + 1;
            else
                hi = mid;
        }
        d[k] = lo;
    }
    Trichotomy t = hermite_given_degrees(a, d);
    if (t.kind != TrichotomyKind::Exact)
        throw math_error("degree-sequence search failed; input may be rank deficient");
    out.degrees = d;
    out.pair = std::move(t.pair);
    return out;
}

/// Fast probe oracle: the reduced system with all entries evaluated at a
/// fixed rational point.  Generically the consistency classification agrees
/// with the exact one; any wrong answer is caught later because the exact
/// probe that follows the search self-verifies.
class EvalProbe {
public:
    EvalProbe(const OreMatrix& a, const Rational& alpha, int bound)
        : n_(a.rows()), dmax_(matrix_degree(a)), alpha_(alpha) {
        int rho_max = (n_ - 1) * dmax_ + bound;
        RingRef ring = matrix_ring(a);
        rowpow_.resize(n_);
        for (int i = 0; i < n_; ++i) {
            rowpow_[i].resize(rho_max + 1);
            std::vector<OrePoly> row(n_);
            for (int j = 0; j < n_; ++j) row[j] = a(i, j).ring() ? a(i, j) : OrePoly::zero(ring);
            for (int t = 0; t <= rho_max; ++t) {
                if (t > 0)
                    for (int j = 0; j < n_; ++j) row[j] = row[j].times_d_on_left();
                // Coefficient (j, k) of D^t applied to row i, evaluated.
                std::vector<std::vector<Rational>> ev(n_);
                for (int j = 0; j < n_; ++j) {
                    ev[j].resize(row[j].degree() + 2, Rational(0));
                    for (int k = 0; k <= row[j].degree(); ++k)
                        ev[j][k] = eval_ratfun(row[j].coeff(k));
                }
                rowpow_[i][t] = std::move(ev);
            }
        }
    }

    /// True iff every row's system x * A-tilde(alpha) = g-tilde(alpha) is
    /// consistent.
    bool consistent(const std::vector<int>& d) const {
        int dtop = 0;
        for (int v : d) dtop = std::max(dtop, v);
        int rho = (n_ - 1) * dmax_ + dtop;
        std::vector<std::pair<int, int>> cols;
        for (int j = 0; j < n_; ++j)
            for (int k = d[j]; k <= rho + dmax_; ++k) cols.emplace_back(j, k);
        int mc = static_cast<int>(cols.size());
        int unknowns = n_ * (rho + 1);
        // Augmented transposed system: rows are the retained columns,
        // unknown columns, then one rhs column per Hermite row.
        Matrix<Rational> w(mc, unknowns + n_);
        for (int c = 0; c < mc; ++c) {
            auto [j, k] = cols[c];
            for (int i = 0; i < n_; ++i)
                for (int t = 0; t <= rho; ++t) w(c, i * (rho + 1) + t) = coeff_at(i, t, j, k);
            for (int i = 0; i < n_; ++i)
                w(c, unknowns + i) = (j == i && k == d[i]) ? Rational(1) : Rational(0);
        }
        int r = 0;
        for (int c = 0; c < unknowns && r < mc; ++c) {
            int piv = -1;
            for (int i = r; i < mc; ++i)
                if (w(i, c) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) continue;
            w.swap_rows(r, piv);
            for (int i = r + 1; i < mc; ++i) {
                if (w(i, c) == 0) continue;
                Rational f = w(i, c) / w(r, c);
                for (int j2 = c; j2 < unknowns + n_; ++j2) {
                    if (w(r, j2) == 0) continue;
                    w(i, j2) -= f * w(r, j2);
                }
            }
            ++r;
        }
        for (int i = r; i < mc; ++i)
            for (int col = 0; col < n_; ++col)
                if (w(i, unknowns + col) != 0) return false;
        return true;
    }

private:
    Rational eval_ratfun(const RatFun& f) const {
        if (f.is_zero()) return Rational(0);
        Rational den = f.den().eval(alpha_);
        if (den == 0) throw math_error("evaluation point hits a pole");
        return f.num().eval(alpha_) / den;
    }

    Rational coeff_at(int i, int t, int j, int k) const {
        const auto& v = rowpow_[i][t][j];
        if (k < 0 || k >= static_cast<int>(v.size())) return Rational(0);
        return v[k];
    }

    int n_;
    int dmax_;
    Rational alpha_;
    // rowpow_[i][t][j][k] = coeff of D^k in D^t * A_ij, evaluated at alpha.
    std::vector<std::vector<std::vector<std::vector<Rational>>>> rowpow_;
};

/// Degree-sequence search with evaluated probes; nullopt when the candidate
/// fails its own final consistency check (caller retries or falls back).
inline std::optional<std::vector<int>> eval_degree_search(const OreMatrix& a,
                                                          const Rational& alpha, int bound) {
    int n = a.rows();
    EvalProbe probe(a, alpha, bound);
    std::vector<int> d(n, bound);
    for (int k = 0; k < n; ++k) {
        int lo = 0, hi = bound;
        while (lo < hi) {
            int mid = lo + (hi - lo) / 2;
            d[k] = mid;
            if (probe.consistent(d))
                hi = mid;
            else
                lo = mid + 1;
        }
        d[k] = lo;
    }
    if (!probe.consistent(d)) return std::nullopt;
    return d;
}

}  // namespace detail

inline std::vector<int> find_degree_sequence(const OreMatrix& a) {
    return detail::find_degree_sequence_impl(a).degrees;
}

struct CheckResult {
    std::string name;
    bool pass;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool ok() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    bool passed(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return c.pass;
        return false;
    }
};

/// Certificate checks for a claimed UA = H: exact product, Hermite shape,
/// unimodularity of U, and the degree bounds (row sums of H at most n*d,
/// entries of U at most (n-1)*d) when A is square of full rank.
inline VerifyReport verify_hermite(const OreMatrix& a, const OreMatrix& h, const OreMatrix& u) {
    VerifyReport rep;
    bool conformable = u.rows() == u.cols() && u.cols() == a.rows() && h.rows() == a.rows() &&
                       h.cols() == a.cols();
    rep.checks.push_back({"conformable", conformable});
    if (!conformable) return rep;

    rep.checks.push_back({"product", ore_mat_mul(u, a) == h});
    rep.checks.push_back({"shape", is_hermite_shape(h)});
    rep.checks.push_back({"unimodular", is_unimodular(u)});

    int n = a.cols();
    int d = matrix_degree(a);
    bool square_full = a.square() && hermite_rank(h) == n;
    if (square_full) {
        bool diag_ok = true, row_ok = true;
        int diag_sum = 0;
        for (int i = 0; i < n; ++i) {
            int row_sum = 0;
            for (int j = 0; j < n; ++j)
                if (!h(i, j).is_zero()) row_sum += h(i, j).degree();
            if (row_sum > n * d) row_ok = false;
            diag_sum += h(i, i).degree();
        }
        diag_ok = diag_sum <= n * d;
        rep.checks.push_back({"diag_degree_sum", diag_ok});
        rep.checks.push_back({"row_degree_sum", row_ok});
        bool u_ok = matrix_degree(u) <= (n - 1) * d;
        rep.checks.push_back({"u_degree", u_ok});
    }
    return rep;
}

namespace detail {

/// Full-rank square path.  The degree budget is the degree of the Dieudonne
/// determinant (= sum of the diagonal degrees of H); the sequence itself is
/// located with cheap evaluated probes and confirmed by one exact
/// self-verifying probe, with the all-exact search as a fallback.
inline HermitePair hermite_square_full_rank(const OreMatrix& a, int total_degree) {
    static const Rational kAlphas[] = {Rational(7, 3), Rational(11, 5), Rational(-13, 7),
                                       Rational(17, 2), Rational(23, 9)};
    int n = a.rows();
    int dmax = matrix_degree(a);
    for (const Rational& alpha : kAlphas) {
        std::optional<std::vector<int>> d;
        try {
            d = eval_degree_search(a, alpha, total_degree);
        } catch (const math_error&) {
            continue;  // pole at alpha; try the next point
        }
        if (!d) continue;
        int sumd = 0, dtop = 0;
        for (int v : *d) {
            sumd += v;
            dtop = std::max(dtop, v);
        }
        // The diagonal degrees of the Hermite form sum to the Ddet degree;
        // a candidate that misses that can only be wrong.
        if (sumd != total_degree) break;
        // The true multiplier has degree at most (n-1)*dmax, so a probe that
        // succeeds at that cheaper order is already certified by its shape
        // and degree checks; retry at the standard order before giving up.
        int rho_small = std::max((n - 1) * dmax, dtop - dmax);
        for (int rho : {rho_small, (n - 1) * dmax + dtop}) {
            try {
                Trichotomy t = hermite_given_degrees(a, *d, rho);
                if (t.kind == TrichotomyKind::Exact) return *std::move(t.pair);
            } catch (const math_error&) {
            }
        }
        break;  // exact probes contradict the evaluated search; go exact
    }
    DegreeSearchResult res = find_degree_sequence_impl(a, total_degree);
    return *res.pair;
}

// Lexicographically next m-combination of {0, ..., n-1}; false when done.
inline bool next_combination(std::vector<int>& idx, int n) {
    int m = static_cast<int>(idx.size());
    for (int i = m - 1; i >= 0; --i) {
        if (idx[i] < n - m + i) {
            ++idx[i];
            for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace detail

/// Hermite form of an arbitrary matrix.  Square full-rank inputs go through
/// the linear-system method; wide full-row-rank inputs search column subsets
/// in lexicographic order; rank-deficient or tall inputs are triangularized
/// by the Euclidean oracle first.  Falls back to the oracle whenever the
/// linear-system route fails verification.
inline HermitePair hermite(const OreMatrix& a) {
    int m = a.rows(), n = a.cols();
    RingRef ring = matrix_ring(a);
    if (!ring || ore_mat_is_zero(a)) {
        if (!ring) throw math_error("matrix has no ring");
        return HermitePair{a, ore_identity(m, ring)};
    }

    // The triangularization doubles as rank test, degree budget, and
    // fallback when any step of the linear-system route fails.
    HermiteNaiveResult naive = hermite_naive(a);
    int r = naive.rank;

    if (r == m && m == n) {
        int s = 0;
        for (int i = 0; i < n; ++i) s += naive.pair.h(i, i).degree();
        try {
            return detail::hermite_square_full_rank(a, s);
        } catch (const math_error&) {
        }
        return naive.pair;
    }

    if (r == m && m < n) {
        // Lexicographically first column subset whose square core yields a U
        // that puts all of A in Hermite form.
        std::vector<int> idx(m);
        for (int i = 0; i < m; ++i) idx[i] = i;
        do {
            OreMatrix sub(m, m);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) sub(i, j) = a(i, idx[j]);
            Deg s = ddet_degree(sub);
            if (s.is_neg_inf()) continue;
            HermitePair hp;
            try {
                hp = detail::hermite_square_full_rank(sub, s.value());
            } catch (const math_error&) {
                continue;
            }
            OreMatrix h = ore_mat_mul(hp.u, a);
            if (is_hermite_shape(h)) return HermitePair{std::move(h), std::move(hp.u)};
        } while (detail::next_combination(idx, n));
        return naive.pair;
    }

    // Rank deficient (or tall): Euclidean triangularization exposes the r
    // nonzero rows; rerun the linear-system path on the full-rank core.
    OreMatrix core(r, n, OrePoly::zero(ring));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < n; ++j) core(i, j) = naive.pair.h(i, j);
    HermitePair core_hp = r > 0 ? hermite(core) : HermitePair{core, ore_identity(0, ring)};
    OreMatrix h(m, n, OrePoly::zero(ring));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < n; ++j) h(i, j) = core_hp.h(i, j);
    OreMatrix u(m, m, OrePoly::zero(ring));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) u(i, j) = core_hp.u(i, j);
    for (int i = r; i < m; ++i) u(i, i) = OrePoly::one(ring);
    u = ore_mat_mul(u, naive.pair.u);
    if (ore_mat_mul(u, a) == h && is_hermite_shape(h)) return HermitePair{std::move(h), std::move(u)};
    return naive.pair;
}

}  // namespace oreh

#endif
