#ifndef OREHERMITE_UPOLY_HPP
#define OREHERMITE_UPOLY_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "orehermite/common.hpp"

namespace oreh {

/// Univariate polynomial in z with exact rational coefficients.
/// Coefficient i is the coefficient of z^i; the leading coefficient is
/// nonzero unless the polynomial is zero (empty coefficient vector).
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    UPoly(const Rational& r) {
        if (r != 0) c_.push_back(r);
    }
    UPoly(long v) : UPoly(Rational(v)) {}

    static UPoly zero() { return UPoly(); }
    static UPoly one() { return UPoly(Rational(1)); }
    static UPoly z() { return UPoly(std::vector<Rational>{Rational(0), Rational(1)}); }
    static UPoly monomial(const Rational& coeff, int power) {
        if (coeff == 0) return UPoly();
        std::vector<Rational> c(power + 1);
        c[power] = coeff;
        return UPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    Deg deg() const { return is_zero() ? Deg::neg_inf() : Deg(degree()); }

    const Rational& coeff(int i) const {
        static const Rational kZero(0);
        if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
        return c_[i];
    }
    const Rational& lc() const {
        if (is_zero()) throw math_error("leading coefficient of zero polynomial");
        return c_.back();
    }
    const std::vector<Rational>& coeffs() const { return c_; }

    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
        return UPoly(std::move(c));
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
        return UPoly(std::move(c));
    }
    friend UPoly operator-(const UPoly& a) {
        std::vector<Rational> c(a.c_);
        for (auto& x : c) x = -x;
        return UPoly(std::move(c));
    }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return UPoly();
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return UPoly(std::move(c));
    }
    friend UPoly operator*(const Rational& s, const UPoly& a) {
        if (s == 0) return UPoly();
        std::vector<Rational> c(a.c_);
        for (auto& x : c) x *= s;
        return UPoly(std::move(c));
    }

    /// Euclidean division: a = q*b + r with deg r < deg b.
    static std::pair<UPoly, UPoly> divrem(const UPoly& a, const UPoly& b) {
        if (b.is_zero()) throw math_error("division by zero polynomial");
        UPoly r = a;
        std::vector<Rational> q(std::max<int>(a.degree() - b.degree() + 1, 0));
        while (!r.is_zero() && r.degree() >= b.degree()) {
            int k = r.degree() - b.degree();
            Rational f = r.lc() / b.lc();
            q[k] = f;
            for (int i = 0; i <= b.degree(); ++i) r.c_[i + k] -= f * b.c_[i];
            r.trim();
        }
        return {UPoly(std::move(q)), r};
    }

    bool divides(const UPoly& a) const { return divrem(a, *this).second.is_zero(); }

    UPoly monic() const {
        if (is_zero()) return *this;
        return (Rational(1) / lc()) * *this;
    }

    UPoly derivative() const {
        if (c_.size() <= 1) return UPoly();
        std::vector<Rational> c(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = Rational(static_cast<long>(i)) * c_[i];
        return UPoly(std::move(c));
    }

    /// p(q(z)) for polynomial q, by Horner.
    UPoly compose(const UPoly& q) const {
        UPoly acc;
        for (int i = degree(); i >= 0; --i) acc = acc * q + UPoly(c_[i]);
        return acc;
    }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (int i = degree(); i >= 0; --i) acc = acc * x + c_[i];
        return acc;
    }

    /// Monic gcd over Q[z].  Works on primitive integer images to keep
    /// the rational coefficients from blowing up mid-remainder-sequence.
    static UPoly gcd(const UPoly& a, const UPoly& b) {
        if (a.is_zero()) return b.monic();
        if (b.is_zero()) return a.monic();
        std::vector<Integer> u = primitive_int(a), v = primitive_int(b);
        while (!v.empty()) {
            std::vector<Integer> r = pseudo_rem(u, v);
            make_primitive(r);
            u = std::move(v);
            v = std::move(r);
        }
        std::vector<Rational> c(u.size());
        for (size_t i = 0; i < u.size(); ++i) c[i] = Rational(u[i]);
        return UPoly(std::move(c)).monic();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    static std::vector<Integer> primitive_int(const UPoly& p) {
        Integer den(1);
        for (const auto& q : p.c_) den = lcm(den, q.get_den());
        std::vector<Integer> v(p.c_.size());
        for (size_t i = 0; i < v.size(); ++i) v[i] = p.c_[i].get_num() * (den / p.c_[i].get_den());
        make_primitive(v);
        return v;
    }

    static void make_primitive(std::vector<Integer>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
        if (v.empty()) return;
        Integer g(0);
        for (const auto& x : v) g = ::gcd(g, x);
        for (auto& x : v) x /= g;
    }

    // Pseudo-remainder of integer polynomials: lc(v)^(du-dv+1) * u mod v.
    static std::vector<Integer> pseudo_rem(std::vector<Integer> u, const std::vector<Integer>& v) {
        const Integer& lv = v.back();
        int dv = static_cast<int>(v.size()) - 1;
        while (static_cast<int>(u.size()) - 1 >= dv) {
            Integer lu = u.back();
            int k = static_cast<int>(u.size()) - 1 - dv;
            for (auto& x : u) x *= lv;
            for (int i = 0; i <= dv; ++i) u[i + k] -= lu * v[i];
            while (!u.empty() && u.back() == 0) u.pop_back();
        }
        return u;
    }

    std::vector<Rational> c_;
};

}  // namespace oreh

#endif
