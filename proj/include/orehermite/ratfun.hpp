#ifndef OREHERMITE_RATFUN_HPP
#define OREHERMITE_RATFUN_HPP

#include <utility>

#include "orehermite/upoly.hpp"

namespace oreh {

/// Element of Q(z) as a coprime fraction with monic denominator.
/// Zero is 0/1; any Q-content lives in the numerator.
class RatFun {
public:
    RatFun() : num_(), den_(UPoly::one()) {}
    RatFun(const Rational& r) : num_(UPoly(r)), den_(UPoly::one()) {}
    RatFun(long v) : RatFun(Rational(v)) {}
    RatFun(UPoly num) : num_(std::move(num)), den_(UPoly::one()) {}

    RatFun(UPoly num, UPoly den) {
        if (den.is_zero()) throw math_error("division by zero polynomial");
        if (num.is_zero()) {
            den_ = UPoly::one();
            return;
        }
        UPoly g = UPoly::gcd(num, den);
        if (g.degree() > 0) {
            num = UPoly::divrem(num, g).first;
            den = UPoly::divrem(den, g).first;
        }
        Rational s = Rational(1) / den.lc();
        num_ = s * num;
        den_ = s * den;
    }

    static RatFun zero() { return RatFun(); }
    static RatFun one() { return RatFun(Rational(1)); }
    static RatFun z() { return RatFun(UPoly::z()); }

    const UPoly& num() const { return num_; }
    const UPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_ == UPoly::one() && num_ == UPoly::one(); }
    bool is_polynomial() const { return den_ == UPoly::one(); }

    /// max(deg num, deg den); -inf for zero.  This is the size measure,
    /// not the valuation deg num - deg den.
    Deg deg_z() const {
        if (is_zero()) return Deg::neg_inf();
        return Deg(std::max(num_.degree(), den_.degree()));
    }

    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    friend RatFun operator+(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator-(const RatFun& a) {
        RatFun r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFun operator*(const RatFun& a, const RatFun& b) {
        if (a.is_zero() || b.is_zero()) return RatFun();
        // Cross-reduce before multiplying.
        RatFun x(a.num_, b.den_), y(b.num_, a.den_);
        RatFun r;
        r.num_ = x.num_ * y.num_;
        r.den_ = x.den_ * y.den_;
        return r;
    }
    friend RatFun operator/(const RatFun& a, const RatFun& b) {
        if (b.is_zero()) throw math_error("division by zero");
        return a * b.inverse();
    }

    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }

    RatFun inverse() const {
        if (is_zero()) throw math_error("division by zero");
        RatFun r;
        Rational s = Rational(1) / num_.lc();
        r.num_ = s * den_;
        r.den_ = s * num_;
        return r;
    }

private:
    UPoly num_;
    UPoly den_;  // monic, nonzero
};

/// Invertible Mobius substitution z -> (a z + b)/(c z + d), ad - bc != 0.
struct Mobius {
    Rational a{1}, b{0}, c{0}, d{1};

    static Mobius identity() { return {}; }

    bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }
    Rational determinant() const { return a * d - b * c; }

    Mobius inverse() const { return Mobius{d, -b, -c, a}; }

    RatFun of_z() const {
        return RatFun(UPoly(std::vector<Rational>{b, a}), UPoly(std::vector<Rational>{d, c}));
    }

    friend bool operator==(const Mobius& x, const Mobius& y) {
        // Compare up to scaling.
        return x.a * y.b == y.a * x.b && x.a * y.c == y.a * x.c && x.a * y.d == y.a * x.d &&
               x.b * y.c == y.b * x.c && x.b * y.d == y.b * x.d && x.c * y.d == y.c * x.d;
    }

    /// p(sigma(z)) as a fraction: sum p_k (az+b)^k (cz+d)^(n-k) over (cz+d)^n.
    RatFun apply(const UPoly& p) const {
        if (p.is_zero()) return RatFun();
        if (is_identity()) return RatFun(p);
        UPoly A(std::vector<Rational>{b, a});
        UPoly C(std::vector<Rational>{d, c});
        int n = p.degree();
        UPoly numer;
        UPoly cpow = UPoly::one();  // C^(n-k), built from the top down
        UPoly apow = UPoly::one();
        std::vector<UPoly> apows(n + 1);
        apows[0] = UPoly::one();
        for (int k = 1; k <= n; ++k) apows[k] = apows[k - 1] * A;
        for (int k = n; k >= 0; --k) {
            if (p.coeff(k) != 0) numer = numer + p.coeff(k) * (apows[k] * cpow);
            cpow = cpow * C;
        }
        // cpow is now C^(n+1); denominator is C^n.
        UPoly denp = UPoly::one();
        for (int k = 0; k < n; ++k) denp = denp * C;
        return RatFun(std::move(numer), std::move(denp));
    }
};

/// Ore ring specification: the automorphism sigma (a Mobius map) and the
/// sigma-derivation delta, which is zero on Q and determined by delta(z).
class RingSpec {
public:
    enum class Kind { differential, shift, qshift, custom };

    static RingSpec differential() {
        RingSpec s;
        s.kind_ = Kind::differential;
        s.delta_of_z_ = RatFun::one();
        return s;
    }
    static RingSpec shift() {
        RingSpec s;
        s.kind_ = Kind::shift;
        s.sigma_ = Mobius{1, 1, 0, 1};
        return s;
    }
    static RingSpec qshift(const Rational& q) {
        if (q == 0) throw math_error("q-shift requires q != 0");
        RingSpec s;
        s.kind_ = Kind::qshift;
        s.sigma_ = Mobius{q, 0, 0, 1};
        s.q_ = q;
        return s;
    }
    static RingSpec custom(const Mobius& sigma, const RatFun& delta_of_z) {
        if (sigma.determinant() == 0) throw math_error("sigma is not an invertible Mobius map");
        RingSpec s;
        s.kind_ = Kind::custom;
        s.sigma_ = sigma;
        s.delta_of_z_ = delta_of_z;
        return s;
    }

    Kind kind() const { return kind_; }
    const Mobius& sigma() const { return sigma_; }
    RatFun sigma_of_z() const { return sigma_.of_z(); }
    const RatFun& delta_of_z() const { return delta_of_z_; }
    const Rational& q() const { return q_; }

    bool sigma_is_identity() const { return sigma_.is_identity(); }
    bool delta_is_zero() const { return delta_of_z_.is_zero(); }

    friend bool operator==(const RingSpec& x, const RingSpec& y) {
        return x.sigma_ == y.sigma_ && x.delta_of_z_ == y.delta_of_z_;
    }
    friend bool operator!=(const RingSpec& x, const RingSpec& y) { return !(x == y); }

    /// sigma(a): substitute z -> sigma(z).  A field automorphism fixing Q.
    RatFun apply_sigma(const RatFun& a) const {
        if (sigma_.is_identity()) return a;
        return sigma_.apply(a.num()) / sigma_.apply(a.den());
    }

    RatFun apply_sigma_inv(const RatFun& a) const {
        if (sigma_.is_identity()) return a;
        Mobius inv = sigma_.inverse();
        return inv.apply(a.num()) / inv.apply(a.den());
    }

    /// The unique sigma-derivation with delta|Q = 0 and delta(z) given.
    /// On fractions p/q: delta(p/q) = (delta(p) - sigma(p/q) delta(q)) / q.
    RatFun apply_delta(const RatFun& a) const {
        if (delta_of_z_.is_zero() || a.is_zero()) return RatFun();
        if (kind_ == Kind::differential) {
            // sigma = id: the ordinary quotient rule.
            UPoly p = a.num(), q = a.den();
            return RatFun(p.derivative() * q - p * q.derivative(), q * q);
        }
        RatFun dp = delta_poly(a.num());
        if (a.is_polynomial()) return dp;
        RatFun dq = delta_poly(a.den());
        RatFun qf(a.den());
        return (dp - apply_sigma(a) * dq) / qf;
    }

private:
    RingSpec() = default;

    // delta on monomials via delta(z^n) = sigma(z) delta(z^(n-1)) + delta(z) z^(n-1).
    RatFun delta_poly(const UPoly& p) const {
        RatFun acc;
        RatFun dzn;  // delta(z^n), starting at n = 0
        RatFun zn(UPoly::one());
        RatFun sz = sigma_of_z();
        for (int n = 0; n <= p.degree(); ++n) {
            if (n > 0) {
                dzn = sz * dzn + delta_of_z_ * zn;
                zn = zn * RatFun::z();
            }
            if (p.coeff(n) != 0) acc += RatFun(p.coeff(n)) * dzn;
        }
        return acc;
    }

    Kind kind_ = Kind::differential;
    Mobius sigma_ = Mobius::identity();
    RatFun delta_of_z_;
    Rational q_{0};
};

}  // namespace oreh

#endif
