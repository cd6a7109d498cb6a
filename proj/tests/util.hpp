#ifndef OREHERMITE_TESTS_UTIL_HPP
#define OREHERMITE_TESTS_UTIL_HPP

#include <random>
#include <string>
#include <vector>

#include "orehermite/orehermite.hpp"

namespace testutil {

using namespace oreh;

inline OrePoly P(const std::string& s, const RingRef& ring) { return parse_orepoly(s, ring); }

/// Deterministic generator for small random inputs.
struct Rng {
    std::mt19937 g;
    explicit Rng(unsigned seed) : g(seed) {}

    int uniform(int lo, int hi) {
        std::uniform_int_distribution<int> d(lo, hi);
        return d(g);
    }

    Rational rat() { return Rational(uniform(-4, 4)); }

    /// Random z-polynomial of degree at most e (may be zero).
    UPoly upoly(int e) {
        std::vector<Rational> c(e + 1);
        for (auto& x : c) x = rat();
        return UPoly(std::move(c));
    }

    UPoly upoly_nonzero(int e) {
        for (;;) {
            UPoly p = upoly(e);
            if (!p.is_zero()) return p;
        }
    }

    /// Random polynomial element of Q(z), deg <= e.
    RatFun ratfun(int e) { return RatFun(upoly(e)); }

    /// Random genuine fraction with nonzero denominator of degree <= e.
    RatFun ratfun_frac(int e) { return RatFun(upoly(e), upoly_nonzero(e)); }

    RatFun ratfun_frac_nonzero(int e) {
        for (;;) {
            RatFun f = ratfun_frac(e);
            if (!f.is_zero()) return f;
        }
    }

    /// Random Ore polynomial: deg_D chosen in [0, d], polynomial coefficients
    /// of z-degree <= e, nonzero leading coefficient.
    OrePoly orepoly(const RingRef& ring, int d, int e) {
        int deg = uniform(0, d);
        std::vector<RatFun> c(deg + 1);
        for (auto& x : c) x = ratfun(e);
        if (c.back().is_zero()) c.back() = RatFun(upoly_nonzero(e));
        return OrePoly(ring, std::move(c));
    }

    OrePoly orepoly_nonzero(const RingRef& ring, int d, int e) {
        for (;;) {
            OrePoly f = orepoly(ring, d, e);
            if (!f.is_zero()) return f;
        }
    }

    OreMatrix matrix(const RingRef& ring, int m, int n, int d, int e) {
        OreMatrix a(m, n, OrePoly::zero(ring));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) a(i, j) = orepoly(ring, d, e);
        return a;
    }

    /// Random square matrix that the Euclidean oracle certifies as full rank.
    OreMatrix full_rank_matrix(const RingRef& ring, int n, int d, int e) {
        for (;;) {
            OreMatrix a = matrix(ring, n, n, d, e);
            if (oreh::rank(a) == n) return a;
        }
    }

    /// Random unimodular matrix: a product of elementary row additions
    /// E(i, j; w) and row swaps applied to the identity.
    OreMatrix unimodular(const RingRef& ring, int n, int steps, int d, int e) {
        OreMatrix u = ore_identity(n, ring);
        for (int s = 0; s < steps; ++s) {
            int i = uniform(0, n - 1), j = uniform(0, n - 1);
            if (i == j) {
                u.swap_rows(i, (i + 1) % n);
                continue;
            }
            OrePoly w = orepoly(ring, d, e);
            for (int c = 0; c < n; ++c) u(i, c) = u(i, c) + w * u(j, c);
        }
        return u;
    }
};

}  // namespace testutil

#endif
