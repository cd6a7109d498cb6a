#ifndef OREHERMITE_EUCLID_HPP
#define OREHERMITE_EUCLID_HPP

#include <utility>

#include "orehermite/orepoly.hpp"

namespace oreh {

/// Extended GCRD certificate: u a + v b = g (monic), s a = -t b = lclm(a, b).
/// The 2x2 matrix [[u, v], [s, t]] maps (a, b)^T to (g, 0)^T and is unimodular.
struct GcrdCertificate {
    OrePoly g;
    OrePoly u, v;
    OrePoly s, t;
};

namespace detail {

/// Unit of Q(z) that clears all denominators of the given polynomials and
/// divides out the common numerator factor; 1 when everything is zero.
/// Multiplying a row by this keeps Euclidean cascades from compounding
/// rational-function growth.
inline RatFun content_unit(std::initializer_list<const OrePoly*> polys) {
    UPoly num_gcd;                  // zero: gcd identity
    UPoly den_lcm = UPoly::one();
    for (const OrePoly* p : polys) {
        for (int i = 0; i <= p->degree(); ++i) {
            const RatFun& x = p->coeff(i);
            if (x.is_zero()) continue;
            if (num_gcd.degree() != 0) num_gcd = UPoly::gcd(num_gcd, x.num());
            if (x.den().degree() > 0) {
                UPoly g = UPoly::gcd(den_lcm, x.den());
                den_lcm = den_lcm * UPoly::divrem(x.den(), g).first;
            }
        }
    }
    if (num_gcd.is_zero()) return RatFun::one();
    return RatFun(den_lcm, num_gcd);
}

}  // namespace detail

inline GcrdCertificate gcrd_ext(const OrePoly& a, const OrePoly& b) {
    if (a.is_zero() && b.is_zero()) throw math_error("gcrd(0, 0) is undefined");
    const RingRef& ring = a.ring() ? a.ring() : b.ring();
    OrePoly one = OrePoly::one(ring), zero = OrePoly::zero(ring);

    // Rows (r_i, u_i, v_i) with u_i a + v_i b = r_i; each new remainder row
    // is rescaled by a content unit to keep coefficient growth in check.
    OrePoly r0 = a, u0 = one, v0 = zero;
    OrePoly r1 = b, u1 = zero, v1 = one;
    if (r0.is_zero()) {
        std::swap(r0, r1);
        std::swap(u0, u1);
        std::swap(v0, v1);
    }
    while (!r1.is_zero()) {
        auto [q, r] = OrePoly::right_divmod(r0, r1);
        OrePoly u2 = u0 - q * u1;
        OrePoly v2 = v0 - q * v1;
        r0 = r1;
        u0 = u1;
        v0 = v1;
        r1 = r;
        u1 = u2;
        v1 = v2;
        if (!r1.is_zero()) {
            RatFun s = detail::content_unit({&r1, &u1, &v1});
            r1 = s * r1;
            u1 = s * u1;
            v1 = s * v1;
        }
    }
    {
        // Normalize the gcrd row monic.
        RatFun s = r0.lc().inverse();
        r0 = s * r0;
        u0 = s * u0;
        v0 = s * v0;
    }
    GcrdCertificate cert;
    cert.g = r0;
    cert.u = u0;
    cert.v = v0;
    if (a.is_zero() || b.is_zero()) {
        // Degenerate: the null row is an axis; lclm itself is undefined.
        cert.s = a.is_zero() ? one : zero;
        cert.t = a.is_zero() ? zero : one;
        return cert;
    }
    // u1 a + v1 b = 0, so s a = -t b = lclm(a, b); normalize it monic.
    OrePoly m = u1 * a;
    if (!m.is_zero()) {
        RatFun s = m.lc().inverse();
        u1 = s * u1;
        v1 = s * v1;
    }
    cert.s = u1;
    cert.t = v1;
    return cert;
}

inline OrePoly gcrd(const OrePoly& a, const OrePoly& b) { return gcrd_ext(a, b).g; }

/// Monic least common left multiple, from the Euclidean cascade cofactors.
inline OrePoly lclm(const OrePoly& a, const OrePoly& b) {
    if (a.is_zero() || b.is_zero()) throw math_error("lclm requires nonzero arguments");
    return gcrd_ext(a, b).s * a;
}

/// Extended GCLD certificate: a u + b v = g (g monic, normalized by a right
/// unit), a = g abar, b = g bbar, and m = a fbar = -b gbar = lcrm(a, b).
struct GcldCertificate {
    OrePoly g;
    OrePoly u, v;      // a u + b v = g
    OrePoly abar, bbar;  // a = g abar, b = g bbar
    OrePoly m;           // lcrm(a, b), monic; zero when either input is zero
    OrePoly fbar, gbar;  // m = a fbar = -b gbar
};

/// Mirror cascade with left division.  gcld is unique up to a right unit;
/// it is normalized monic by right scaling.
inline GcldCertificate gcld_lcrm(const OrePoly& a, const OrePoly& b) {
    if (a.is_zero() && b.is_zero()) throw math_error("gcld(0, 0) is undefined");
    const RingRef& ring = a.ring() ? a.ring() : b.ring();
    OrePoly one = OrePoly::one(ring), zero = OrePoly::zero(ring);

    auto right_scale_monic = [&](OrePoly& r, OrePoly& u, OrePoly& v) {
        if (r.is_zero()) return;
        // r * c has leading coefficient lc(r) * sigma^(deg r)(c).
        RatFun c = r.sigma_pow(r.lc().inverse(), -r.degree());
        OrePoly cs(ring, c);
        r = r * cs;
        u = u * cs;
        v = v * cs;
    };

    OrePoly r0 = a, u0 = one, v0 = zero;
    OrePoly r1 = b, u1 = zero, v1 = one;
    right_scale_monic(r0, u0, v0);
    right_scale_monic(r1, u1, v1);
    if (r0.is_zero()) {
        std::swap(r0, r1);
        std::swap(u0, u1);
        std::swap(v0, v1);
    }
    while (!r1.is_zero()) {
        auto [q, r] = OrePoly::left_divmod(r0, r1);
        OrePoly u2 = u0 - u1 * q;
        OrePoly v2 = v0 - v1 * q;
        r0 = r1;
        u0 = u1;
        v0 = v1;
        r1 = r;
        u1 = u2;
        v1 = v2;
        right_scale_monic(r1, u1, v1);
    }
    GcldCertificate cert;
    cert.g = r0;
    cert.u = u0;
    cert.v = v0;
    cert.abar = a.is_zero() ? zero : OrePoly::left_divmod(a, cert.g).first;
    cert.bbar = b.is_zero() ? zero : OrePoly::left_divmod(b, cert.g).first;
    if (a.is_zero() || b.is_zero()) {
        cert.m = zero;
        cert.fbar = zero;
        cert.gbar = a.is_zero() ? -one : zero;
        return cert;
    }
    // a u1 + b v1 = 0, so a u1 = -b v1 = lcrm(a, b); right-normalize monic.
    OrePoly m = a * u1;
    if (!m.is_zero()) {
        RatFun c = m.sigma_pow(m.lc().inverse(), -m.degree());
        OrePoly cs(ring, c);
        m = m * cs;
        u1 = u1 * cs;
        v1 = v1 * cs;
    }
    cert.m = m;
    cert.fbar = u1;
    cert.gbar = v1;
    return cert;
}

inline OrePoly gcld(const OrePoly& a, const OrePoly& b) { return gcld_lcrm(a, b).g; }

inline OrePoly lcrm(const OrePoly& a, const OrePoly& b) {
    if (a.is_zero() || b.is_zero()) throw math_error("lcrm requires nonzero arguments");
    return gcld_lcrm(a, b).m;
}

}  // namespace oreh

#endif
