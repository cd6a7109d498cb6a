#ifndef OREHERMITE_SKEWFRAC_HPP
#define OREHERMITE_SKEWFRAC_HPP

#include <utility>

#include "orehermite/euclid.hpp"

namespace oreh {

/// Element of the skew quotient field as a standard fraction f g^-1 with the
/// inverse on the right.  Normalized: gcrd(f, g) = 1, g monic, zero is 0 * 1^-1.
class SkewFraction {
public:
    SkewFraction() = default;
    explicit SkewFraction(const OrePoly& f)
        : num_(f), den_(OrePoly::one(f.ring())) {}
    SkewFraction(OrePoly f, OrePoly g) : num_(std::move(f)), den_(std::move(g)) { normalize(); }

    static SkewFraction zero(const RingRef& ring) {
        return SkewFraction(OrePoly::zero(ring));
    }
    static SkewFraction one(const RingRef& ring) { return SkewFraction(OrePoly::one(ring)); }

    const OrePoly& num() const { return num_; }
    const OrePoly& den() const { return den_; }
    const RingRef& ring() const { return den_.ring() ? den_.ring() : num_.ring(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    /// deg f - deg g; -inf for zero.  Representation independent.
    Deg deg() const {
        if (is_zero()) return Deg::neg_inf();
        return Deg(num_.degree() - den_.degree());
    }

    friend SkewFraction operator+(const SkewFraction& x, const SkewFraction& y) {
        if (x.is_zero()) return y;
        if (y.is_zero()) return x;
        // w = lcrm(g_x, g_y) = g_x vbar = g_y gbar; x + y = (f_x vbar + f_y gbar) w^-1.
        GcldCertificate c = gcld_lcrm(x.den_, y.den_);
        const OrePoly& w = c.m;
        OrePoly vbar = c.fbar;
        OrePoly gbar = -c.gbar;
        return SkewFraction(x.num_ * vbar + y.num_ * gbar, w);
    }
    friend SkewFraction operator-(const SkewFraction& x, const SkewFraction& y) {
        return x + (-y);
    }
    friend SkewFraction operator-(const SkewFraction& x) {
        SkewFraction r = x;
        r.num_ = -r.num_;
        return r;
    }
    friend SkewFraction operator*(const SkewFraction& x, const SkewFraction& y) {
        if (x.is_zero() || y.is_zero()) {
            return SkewFraction::zero(x.ring() ? x.ring() : y.ring());
        }
        // Rewrite g_x^-1 f_y = ubar wbar^-1 via lcrm(g_x, f_y) = g_x ubar = f_y wbar.
        GcldCertificate c = gcld_lcrm(x.den_, y.num_);
        OrePoly ubar = c.fbar;
        OrePoly wbar = -c.gbar;
        return SkewFraction(x.num_ * ubar, y.den_ * wbar);
    }
    friend SkewFraction operator/(const SkewFraction& x, const SkewFraction& y) {
        return x * y.inverse();
    }

    SkewFraction& operator+=(const SkewFraction& o) { return *this = *this + o; }
    SkewFraction& operator-=(const SkewFraction& o) { return *this = *this - o; }
    SkewFraction& operator*=(const SkewFraction& o) { return *this = *this * o; }

    SkewFraction inverse() const {
        if (is_zero()) throw math_error("inverse of zero skew fraction");
        return SkewFraction(den_, num_);
    }

    /// Equality by subtracting and testing the normalized numerator.
    friend bool operator==(const SkewFraction& x, const SkewFraction& y) {
        if (x.num_ == y.num_ && x.den_ == y.den_) return true;
        return (x - y).is_zero();
    }
    friend bool operator!=(const SkewFraction& x, const SkewFraction& y) { return !(x == y); }

private:
    // Divide out gcrd(num, den) on the right, then scale den monic.
    void normalize() {
        if (den_.is_zero()) throw math_error("zero denominator in skew fraction");
        if (num_.is_zero()) {
            den_ = OrePoly::one(den_.ring());
            return;
        }
        OrePoly g = gcrd(num_, den_);
        if (g.degree() > 0) {
            num_ = OrePoly::right_divmod(num_, g).first;
            den_ = OrePoly::right_divmod(den_, g).first;
        }
        // f g^-1 = (f c)(g c)^-1 for a unit c making g monic.
        RatFun c = den_.sigma_pow(den_.lc().inverse(), -den_.degree());
        OrePoly cs(den_.ring(), c);
        num_ = num_ * cs;
        den_ = den_ * cs;
    }

    OrePoly num_;
    OrePoly den_;
};

/// deg of x, named per the valuation on the skew quotient field.
inline Deg sf_deg(const SkewFraction& x) { return x.deg(); }

}  // namespace oreh

#endif
