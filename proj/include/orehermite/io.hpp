#ifndef OREHERMITE_IO_HPP
#define OREHERMITE_IO_HPP

#include <string>
#include <utility>
#include <vector>

#include "orehermite/detform.hpp"

namespace oreh {

// ---------------------------------------------------------------------------
// Canonical serialization: terms in ascending D-power, coefficients as
// normalized (parenthesized) rational functions, no zero terms, D^0 elided.
// ---------------------------------------------------------------------------

inline std::string rational_str(const Rational& r) { return r.get_str(); }

/// z-polynomial in descending powers, e.g. "2*z^2-z+1/2".
inline std::string upoly_str(const UPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (int k = p.degree(); k >= 0; --k) {
        const Rational& c = p.coeff(k);
        if (c == 0) continue;
        bool neg = c < 0;
        Rational mag = neg ? Rational(-c) : c;
        if (!s.empty())
            s += neg ? "-" : "+";
        else if (neg)
            s += "-";
        if (k == 0) {
            s += rational_str(mag);
        } else {
            if (mag != 1) {
                s += rational_str(mag);
                s += "*";
            }
            s += "z";
            if (k > 1) s += "^" + std::to_string(k);
        }
    }
    return s;
}

inline std::string ratfun_str(const RatFun& r) {
    if (r.is_zero()) return "0";
    if (r.is_polynomial()) return upoly_str(r.num());
    return "(" + upoly_str(r.num()) + ")/(" + upoly_str(r.den()) + ")";
}

inline std::string orepoly_str(const OrePoly& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (int k = 0; k <= f.degree(); ++k) {
        const RatFun& c = f.coeff(k);
        if (c.is_zero()) continue;
        if (!s.empty()) s += " + ";
        if (k == 0) {
            s += "(" + ratfun_str(c) + ")";
            continue;
        }
        std::string dpart = k == 1 ? "D" : "D^" + std::to_string(k);
        if (c.is_one())
            s += dpart;
        else
            s += "(" + ratfun_str(c) + ")*" + dpart;
    }
    return s;
}

inline std::string ring_header_str(const RingSpec& spec) {
    switch (spec.kind()) {
        case RingSpec::Kind::differential:
            return "ring differential";
        case RingSpec::Kind::shift:
            return "ring shift";
        case RingSpec::Kind::qshift:
            return "ring qshift q=" + rational_str(spec.q());
        case RingSpec::Kind::custom:
            return "ring custom sigma=" + ratfun_str(spec.sigma_of_z()) +
                   " delta=" + ratfun_str(spec.delta_of_z());
    }
    throw math_error("unknown ring kind");
}

inline std::string matrix_str(const OreMatrix& m) {
    RingRef ring = matrix_ring(m);
    if (!ring) throw math_error("matrix has no ring");
    std::string s = ring_header_str(*ring) + "\n";
    s += "rows " + std::to_string(m.rows()) + " cols " + std::to_string(m.cols()) + "\n";
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j > 0) s += " ; ";
            s += orepoly_str(m(i, j));
        }
        s += "\n";
    }
    return s;
}

// ---------------------------------------------------------------------------
// Tokenizer and recursive-descent parser.
// ---------------------------------------------------------------------------

namespace detail {

struct Token {
    enum class Kind { Int, Ident, Sym, Newline, End };
    Kind kind = Kind::End;
    std::string text;
    int line = 0;
    int col = 0;
};

inline std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    int line = 1, col = 1;
    size_t i = 0;
    auto push = [&](Token::Kind k, std::string t, int l, int c) {
        out.push_back(Token{k, std::move(t), l, c});
    };
    while (i < text.size()) {
        char ch = text[i];
        if (ch == ' ' || ch == '\t' || ch == '\r') {
            ++i;
            ++col;
            continue;
        }
        if (ch == '#') {  // comment to end of line
            while (i < text.size() && text[i] != '\n') ++i;
            continue;
        }
        if (ch == '\n') {
            push(Token::Kind::Newline, "\n", line, col);
            ++i;
            ++line;
            col = 1;
            continue;
        }
        int tl = line, tc = col;
        if (ch >= '0' && ch <= '9') {
            std::string t;
            while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
                t += text[i++];
                ++col;
            }
            push(Token::Kind::Int, std::move(t), tl, tc);
            continue;
        }
        if ((ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || ch == '_') {
            std::string t;
            while (i < text.size() &&
                   ((text[i] >= 'a' && text[i] <= 'z') || (text[i] >= 'A' && text[i] <= 'Z') ||
                    (text[i] >= '0' && text[i] <= '9') || text[i] == '_')) {
                t += text[i++];
                ++col;
            }
            push(Token::Kind::Ident, std::move(t), tl, tc);
            continue;
        }
        if (std::string("+-*/^();=,").find(ch) != std::string::npos) {
            push(Token::Kind::Sym, std::string(1, ch), tl, tc);
            ++i;
            ++col;
            continue;
        }
        throw parse_error(std::string("unexpected character '") + ch + "'", line, col);
    }
    push(Token::Kind::End, "", line, col);
    return out;
}

class Parser {
public:
    explicit Parser(const std::string& text) : toks_(tokenize(text)) {}

    const Token& peek(int ahead = 0) const {
        size_t i = pos_ + ahead;
        return i < toks_.size() ? toks_[i] : toks_.back();
    }
    const Token& next() {
        const Token& t = peek();
        if (t.kind != Token::Kind::End) ++pos_;
        return t;
    }
    bool at_end() const { return peek().kind == Token::Kind::End; }

    [[noreturn]] void fail(const std::string& msg) const {
        const Token& t = peek();
        std::string got = t.kind == Token::Kind::End       ? "end of input"
                          : t.kind == Token::Kind::Newline ? "end of line"
                                                           : "'" + t.text + "'";
        throw parse_error(msg + "; got " + got, t.line, t.col);
    }

    bool accept_sym(const std::string& s) {
        if (peek().kind == Token::Kind::Sym && peek().text == s) {
            ++pos_;
            return true;
        }
        return false;
    }
    bool accept_ident(const std::string& s) {
        if (peek().kind == Token::Kind::Ident && peek().text == s) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect_sym(const std::string& s) {
        if (!accept_sym(s)) fail("expected '" + s + "'");
    }
    void expect_ident(const std::string& s) {
        if (!accept_ident(s)) fail("expected '" + s + "'");
    }
    void skip_newlines() {
        while (peek().kind == Token::Kind::Newline) ++pos_;
    }
    void expect_line_end() {
        if (peek().kind == Token::Kind::Newline) {
            ++pos_;
            return;
        }
        if (peek().kind == Token::Kind::End) return;
        fail("expected end of line");
    }

    long expect_int() {
        if (peek().kind != Token::Kind::Int) fail("expected an integer");
        const std::string& t = next().text;
        try {
            return std::stol(t);
        } catch (const std::exception&) {
            throw parse_error("integer literal out of range", peek().line, peek().col);
        }
    }

    // expr := ['+'|'-'] term (('+'|'-') term)*
    OrePoly parse_expr(const RingRef& ring) {
        bool neg = false;
        if (accept_sym("-"))
            neg = true;
        else
            accept_sym("+");
        OrePoly acc = parse_term(ring);
        if (neg) acc = -acc;
        for (;;) {
            if (accept_sym("+"))
                acc = acc + parse_term(ring);
            else if (accept_sym("-"))
                acc = acc - parse_term(ring);
            else
                return acc;
        }
    }

    /// Rational-function expression: an Ore expression required to be free
    /// of D.
    RatFun parse_ratfun_expr(const RingRef& ring) {
        const Token& at = peek();
        OrePoly f = parse_expr(ring);
        if (f.degree() > 0)
            throw parse_error("expected a rational function in z (no D)", at.line, at.col);
        return f.coeff(0);
    }

private:
    // term := factor (('*'|'/') factor)*
    OrePoly parse_term(const RingRef& ring) {
        OrePoly acc = parse_factor(ring);
        for (;;) {
            if (accept_sym("*")) {
                acc = acc * parse_factor(ring);
            } else if (accept_sym("/")) {
                const Token& at = peek();
                OrePoly div = parse_factor(ring);
                if (div.degree() != 0)
                    throw parse_error("division requires a nonzero divisor free of D", at.line,
                                      at.col);
                acc = div.coeff(0).inverse() * acc;
            } else {
                return acc;
            }
        }
    }

    // factor := atom ['^' int]
    OrePoly parse_factor(const RingRef& ring) {
        OrePoly base = parse_atom(ring);
        if (accept_sym("^")) {
            long e = expect_int();
            if (e < 0 || e > 512) fail("exponent out of range");
            OrePoly acc = OrePoly::one(ring);
            for (long k = 0; k < e; ++k) acc = acc * base;
            return acc;
        }
        return base;
    }

    // atom := int | 'z' | 'D' | '-' atom | '(' expr ')'
    OrePoly parse_atom(const RingRef& ring) {
        if (accept_sym("-")) return -parse_atom(ring);
        const Token& t = peek();
        if (t.kind == Token::Kind::Int) {
            next();
            return OrePoly(ring, RatFun(Rational(t.text)));
        }
        if (t.kind == Token::Kind::Ident && t.text == "z") {
            next();
            return OrePoly(ring, RatFun::z());
        }
        if (t.kind == Token::Kind::Ident && t.text == "D") {
            next();
            return OrePoly::d(ring);
        }
        if (accept_sym("(")) {
            OrePoly e = parse_expr(ring);
            expect_sym(")");
            return e;
        }
        fail("expected a term (integer, 'z', 'D', or parenthesized expression)");
    }

    std::vector<Token> toks_;
    size_t pos_ = 0;
};

inline Mobius mobius_from_ratfun(const RatFun& r, const Token& at) {
    if (r.is_zero() || r.num().degree() > 1 || r.den().degree() > 1)
        throw parse_error("sigma must be an invertible Mobius map (az+b)/(cz+d)", at.line, at.col);
    Mobius m{r.num().coeff(1), r.num().coeff(0), r.den().coeff(1), r.den().coeff(0)};
    if (m.determinant() == 0)
        throw parse_error("sigma must be an invertible Mobius map (az+b)/(cz+d)", at.line, at.col);
    return m;
}

/// `ring differential|shift|qshift q=<rat>|custom sigma=<ratfun> delta=<ratfun>`
inline RingRef parse_ring_header(Parser& p) {
    p.skip_newlines();
    p.expect_ident("ring");
    const Token& kind = p.peek();
    if (p.accept_ident("differential")) {
        p.expect_line_end();
        return make_ring(RingSpec::differential());
    }
    if (p.accept_ident("shift")) {
        p.expect_line_end();
        return make_ring(RingSpec::shift());
    }
    // The sub-expressions below never mention D; any ring works for parsing.
    RingRef scratch = make_ring(RingSpec::differential());
    if (p.accept_ident("qshift")) {
        p.expect_ident("q");
        p.expect_sym("=");
        const Token& at = p.peek();
        RatFun q = p.parse_ratfun_expr(scratch);
        if (q.is_zero() || !q.is_polynomial() || q.num().degree() > 0)
            throw parse_error("q must be a nonzero rational constant", at.line, at.col);
        p.expect_line_end();
        return make_ring(RingSpec::qshift(q.num().coeff(0)));
    }
    if (p.accept_ident("custom")) {
        p.expect_ident("sigma");
        p.expect_sym("=");
        const Token& sat = p.peek();
        RatFun sig = p.parse_ratfun_expr(scratch);
        p.expect_ident("delta");
        p.expect_sym("=");
        RatFun del = p.parse_ratfun_expr(scratch);
        p.expect_line_end();
        return make_ring(RingSpec::custom(mobius_from_ratfun(sig, sat), del));
    }
    throw parse_error("unknown ring kind '" + kind.text +
                          "' (expected differential, shift, qshift, or custom)",
                      kind.line, kind.col);
}

inline OreMatrix parse_matrix_body(Parser& p, const RingRef& ring) {
    p.skip_newlines();
    p.expect_ident("rows");
    long m = p.expect_int();
    p.expect_ident("cols");
    long n = p.expect_int();
    if (m <= 0 || n <= 0 || m > 1000 || n > 1000) p.fail("matrix dimensions out of range");
    p.expect_line_end();
    OreMatrix a(static_cast<int>(m), static_cast<int>(n), OrePoly::zero(ring));
    for (long i = 0; i < m; ++i) {
        p.skip_newlines();
        for (long j = 0; j < n; ++j) {
            if (j > 0) p.expect_sym(";");
            a(static_cast<int>(i), static_cast<int>(j)) = p.parse_expr(ring);
        }
        p.expect_line_end();
    }
    return a;
}

}  // namespace detail

/// Parse one ring header followed by `count` matrix blocks.
inline std::pair<RingRef, std::vector<OreMatrix>> parse_matrices(const std::string& text,
                                                                 int count) {
    detail::Parser p(text);
    RingRef ring = detail::parse_ring_header(p);
    std::vector<OreMatrix> out;
    for (int k = 0; k < count; ++k) out.push_back(detail::parse_matrix_body(p, ring));
    p.skip_newlines();
    if (!p.at_end()) p.fail("unexpected trailing input");
    return {ring, std::move(out)};
}

inline std::pair<RingRef, OreMatrix> parse_matrix(const std::string& text) {
    auto [ring, mats] = parse_matrices(text, 1);
    return {ring, std::move(mats[0])};
}

/// Ring header followed by two Ore polynomial lines (for gcrd/lclm).
inline std::pair<RingRef, std::pair<OrePoly, OrePoly>> parse_ore_pair(const std::string& text) {
    detail::Parser p(text);
    RingRef ring = detail::parse_ring_header(p);
    p.skip_newlines();
    OrePoly f = p.parse_expr(ring);
    p.expect_line_end();
    p.skip_newlines();
    OrePoly g = p.parse_expr(ring);
    p.expect_line_end();
    p.skip_newlines();
    if (!p.at_end()) p.fail("unexpected trailing input");
    return {ring, {std::move(f), std::move(g)}};
}

inline OrePoly parse_orepoly(const std::string& text, const RingRef& ring) {
    detail::Parser p(text);
    p.skip_newlines();
    OrePoly f = p.parse_expr(ring);
    p.expect_line_end();
    p.skip_newlines();
    if (!p.at_end()) p.fail("unexpected trailing input");
    return f;
}

}  // namespace oreh

#endif
