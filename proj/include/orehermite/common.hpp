#ifndef OREHERMITE_COMMON_HPP
#define OREHERMITE_COMMON_HPP

#include <gmpxx.h>

#include <limits>
#include <stdexcept>
#include <string>

namespace oreh {

using Rational = mpq_class;
using Integer = mpz_class;

struct math_error : std::runtime_error {
    explicit math_error(const std::string& what) : std::runtime_error(what) {}
};

struct parse_error : std::runtime_error {
    int line;
    int column;
    parse_error(const std::string& what, int line_, int column_)
        : std::runtime_error(what + " (line " + std::to_string(line_) + ", column " +
                             std::to_string(column_) + ")"),
          line(line_),
          column(column_) {}
};

/// Degree value from Z u {-inf}.  -inf is the degree of zero and is a
/// distinct state, never an encoded integer.
class Deg {
public:
    Deg() : finite_(false), v_(0) {}
    Deg(int v) : finite_(true), v_(v) {}

    static Deg neg_inf() { return Deg(); }

    bool is_neg_inf() const { return !finite_; }
    int value() const {
        if (!finite_) throw math_error("degree is -infinity");
        return v_;
    }

    friend bool operator==(Deg a, Deg b) {
        if (a.finite_ != b.finite_) return false;
        return !a.finite_ || a.v_ == b.v_;
    }
    friend bool operator!=(Deg a, Deg b) { return !(a == b); }
    friend bool operator<(Deg a, Deg b) {
        if (!a.finite_) return b.finite_;
        if (!b.finite_) return false;
        return a.v_ < b.v_;
    }
    friend bool operator<=(Deg a, Deg b) { return a < b || a == b; }
    friend bool operator>(Deg a, Deg b) { return b < a; }
    friend bool operator>=(Deg a, Deg b) { return b <= a; }

    // -inf absorbs addition.
    friend Deg operator+(Deg a, Deg b) {
        if (!a.finite_ || !b.finite_) return neg_inf();
        return Deg(a.v_ + b.v_);
    }
    friend Deg operator-(Deg a) {
        if (!a.finite_) throw math_error("cannot negate -infinity degree");
        return Deg(-a.v_);
    }

    std::string str() const { return finite_ ? std::to_string(v_) : "-inf"; }

private:
    bool finite_;
    int v_;
};

inline Deg max(Deg a, Deg b) { return a < b ? b : a; }

}  // namespace oreh

#endif
