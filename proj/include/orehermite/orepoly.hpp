#ifndef OREHERMITE_OREPOLY_HPP
#define OREHERMITE_OREPOLY_HPP

#include <memory>
#include <utility>
#include <vector>

#include "orehermite/ratfun.hpp"

namespace oreh {

using RingRef = std::shared_ptr<const RingSpec>;

inline RingRef make_ring(RingSpec spec) { return std::make_shared<const RingSpec>(std::move(spec)); }

/// Ore polynomial in D over Q(z), subject to D a = sigma(a) D + delta(a).
/// Coefficient i is the coefficient of D^i.
class OrePoly {
public:
    OrePoly() = default;
    explicit OrePoly(RingRef ring) : ring_(std::move(ring)) {}
    OrePoly(RingRef ring, std::vector<RatFun> coeffs)
        : ring_(std::move(ring)), c_(std::move(coeffs)) {
        trim();
    }
    OrePoly(RingRef ring, const RatFun& scalar) : ring_(std::move(ring)) {
        if (!scalar.is_zero()) c_.push_back(scalar);
    }

    static OrePoly zero(RingRef ring) { return OrePoly(std::move(ring)); }
    static OrePoly one(RingRef ring) { return OrePoly(std::move(ring), RatFun::one()); }
    static OrePoly d(RingRef ring) {
        return OrePoly(std::move(ring), std::vector<RatFun>{RatFun::zero(), RatFun::one()});
    }
    static OrePoly monomial(RingRef ring, const RatFun& coeff, int power) {
        if (coeff.is_zero()) return OrePoly(std::move(ring));
        std::vector<RatFun> c(power + 1);
        c[power] = coeff;
        return OrePoly(std::move(ring), std::move(c));
    }

    const RingRef& ring() const { return ring_; }
    const RingSpec& spec() const {
        if (!ring_) throw math_error("Ore polynomial has no ring");
        return *ring_;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    Deg deg() const { return is_zero() ? Deg::neg_inf() : Deg(degree()); }
    bool is_scalar() const { return c_.size() <= 1; }

    const RatFun& coeff(int i) const {
        static const RatFun kZero;
        if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
        return c_[i];
    }
    const RatFun& lc() const {
        if (is_zero()) throw math_error("leading coefficient of zero Ore polynomial");
        return c_.back();
    }
    bool is_monic() const { return !is_zero() && lc().is_one(); }

    /// max deg_z over coefficients (size measure); -inf for zero.
    Deg deg_z() const {
        Deg m = Deg::neg_inf();
        for (const auto& c : c_) m = max(m, c.deg_z());
        return m;
    }

    friend bool operator==(const OrePoly& a, const OrePoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const OrePoly& a, const OrePoly& b) { return !(a == b); }

    friend OrePoly operator+(const OrePoly& a, const OrePoly& b) {
        const RingRef& r = merge_rings(a, b);
        std::vector<RatFun> c(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
        return OrePoly(r, std::move(c));
    }
    friend OrePoly operator-(const OrePoly& a, const OrePoly& b) {
        const RingRef& r = merge_rings(a, b);
        std::vector<RatFun> c(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
        return OrePoly(r, std::move(c));
    }
    friend OrePoly operator-(const OrePoly& a) {
        std::vector<RatFun> c(a.c_);
        for (auto& x : c) x = -x;
        return OrePoly(a.ring_, std::move(c));
    }

    /// Left scalar multiple s * f (coefficient-wise, s in Q(z)).
    friend OrePoly operator*(const RatFun& s, const OrePoly& f) {
        if (s.is_zero()) return OrePoly(f.ring_);
        std::vector<RatFun> c(f.c_);
        for (auto& x : c) x = s * x;
        return OrePoly(f.ring_, std::move(c));
    }

    /// Exact product via the commutation rule.  Row k of the cache is
    /// D^k * g, derived from row k-1 by one commutation step.
    friend OrePoly operator*(const OrePoly& f, const OrePoly& g) {
        const RingRef& ring = merge_rings(f, g);
        if (f.is_zero() || g.is_zero()) return OrePoly(ring);
        OrePoly acc(ring);
        OrePoly dkg = g;  // D^k g
        for (int k = 0; k <= f.degree(); ++k) {
            if (k > 0) dkg = dkg.times_d_on_left();
            if (!f.c_[k].is_zero()) acc = acc + f.c_[k] * dkg;
        }
        return acc;
    }

    /// D * f = sum sigma(c_j) D^(j+1) + delta(c_j) D^j.
    OrePoly times_d_on_left() const {
        const RingSpec& s = spec();
        std::vector<RatFun> c(c_.size() + 1);
        for (size_t j = 0; j < c_.size(); ++j) {
            c[j + 1] += s.apply_sigma(c_[j]);
            if (!s.delta_is_zero()) c[j] += s.apply_delta(c_[j]);
        }
        return OrePoly(ring_, std::move(c));
    }

    OrePoly monic() const {
        if (is_zero()) return *this;
        return lc().inverse() * *this;
    }

    /// sigma^m applied coefficient-wise is not a ring map; this helper is
    /// for quotient-coefficient computation only.
    RatFun sigma_pow(const RatFun& a, int m) const {
        const RingSpec& s = spec();
        RatFun r = a;
        if (m >= 0)
            for (int i = 0; i < m; ++i) r = s.apply_sigma(r);
        else
            for (int i = 0; i < -m; ++i) r = s.apply_sigma_inv(r);
        return r;
    }

    /// f = q*g + r with deg r < deg g; q, r unique.
    static std::pair<OrePoly, OrePoly> right_divmod(const OrePoly& f, const OrePoly& g) {
        if (g.is_zero()) throw math_error("Ore division by zero");
        const RingRef& ring = merge_rings(f, g);
        OrePoly q(ring), r = f;
        int m = g.degree();
        while (!r.is_zero() && r.degree() >= m) {
            int k = r.degree() - m;
            // Leading coefficient of c D^k * g is c * sigma^k(lc g).
            RatFun c = r.lc() / r.sigma_pow(g.lc(), k);
            OrePoly t = OrePoly::monomial(ring, c, k);
            q = q + t;
            r = r - t * g;
        }
        return {q, r};
    }

    /// f = g*q + r with deg r < deg g.  Uses sigma^-1 for the quotient
    /// coefficients; sigma is invertible by the RingSpec invariant.
    static std::pair<OrePoly, OrePoly> left_divmod(const OrePoly& f, const OrePoly& g) {
        if (g.is_zero()) throw math_error("Ore division by zero");
        const RingRef& ring = merge_rings(f, g);
        OrePoly q(ring), r = f;
        int m = g.degree();
        while (!r.is_zero() && r.degree() >= m) {
            int k = r.degree() - m;
            // Leading coefficient of g * c D^k is lc(g) * sigma^m(c).
            RatFun c = r.sigma_pow(r.lc() / g.lc(), -m);
            OrePoly t = OrePoly::monomial(ring, c, k);
            q = q + t;
            r = r - g * t;
        }
        return {q, r};
    }

private:
    static const RingRef& merge_rings(const OrePoly& a, const OrePoly& b) {
        if (a.ring_ && b.ring_ && a.ring_ != b.ring_ && *a.ring_ != *b.ring_)
            throw math_error("mismatched Ore ring specifications");
        return a.ring_ ? a.ring_ : b.ring_;
    }

    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    RingRef ring_;
    std::vector<RatFun> c_;
};

}  // namespace oreh

#endif
