#pragma once

// Canonical text forms and their parsers.
//   float scalar:  decimal literal, default 10 significant digits
//   exact scalar:  "p/q", "p/q+r/s*sqrt2" or "r/s*sqrt2" in lowest terms;
//                  "/1" is omitted, a sqrt2 coefficient of 1 prints as "sqrt2"
//   element:       "[x1, xi, xj, xk]"
// Every value printed here re-parses to an equal value (exact backend) or to
// one within the comparison tolerance (float backend). Parsers track byte
// positions and throw ParseError.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <string_view>

#include "walg/element.hpp"
#include "walg/errors.hpp"

namespace walg {

inline std::string rational_to_string(const Rational& r) {
    std::ostringstream os;
    os << r;  // "p" or "p/q", lowest terms, sign on the numerator
    return os.str();
}

template <ScalarBackend S>
std::string format_scalar(const S& v, int digits = 10) {
    if constexpr (ScalarOps<S>::exact) {
        (void)digits;
        if (v.irr().is_zero()) return rational_to_string(v.rat());
        const bool neg = v.irr() < 0;
        const Rational mag = neg ? Rational(-v.irr()) : v.irr();
        const std::string tail =
            (mag == 1) ? "sqrt2" : rational_to_string(mag) + "*sqrt2";
        if (v.rat().is_zero()) return (neg ? "-" : "") + tail;
        return rational_to_string(v.rat()) + (neg ? "-" : "+") + tail;
    } else {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.*g", digits, v);
        return buf;
    }
}

template <ScalarBackend S>
std::string format_element(const Element<S>& x, int digits = 10) {
    return "[" + format_scalar(x.x1, digits) + ", " + format_scalar(x.xi, digits) + ", " +
           format_scalar(x.xj, digits) + ", " + format_scalar(x.xk, digits) + "]";
}

namespace detail {

struct Cursor {
    std::string_view s;
    std::size_t pos = 0;

    bool done() const { return pos >= s.size(); }
    char peek() const { return done() ? '\0' : s[pos]; }
    void skip_ws() {
        while (!done() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool consume(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!consume(c)) throw ParseError(std::string("expected ") + what, pos);
    }
    bool consume_word(std::string_view w) {
        if (s.substr(pos, w.size()) == w) {
            pos += w.size();
            return true;
        }
        return false;
    }
};

inline Rational parse_rational(Cursor& c) {
    bool neg = false;
    if (c.consume('-'))
        neg = true;
    else
        c.consume('+');
    if (c.peek() < '0' || c.peek() > '9') throw ParseError("expected digit", c.pos);
    boost::multiprecision::cpp_int num = 0;
    while (c.peek() >= '0' && c.peek() <= '9') {
        num = num * 10 + (c.peek() - '0');
        ++c.pos;
    }
    if (c.peek() == '.' || c.peek() == 'e' || c.peek() == 'E')
        throw ParseError("decimal literal is not a valid exact scalar", c.pos);
    boost::multiprecision::cpp_int den = 1;
    if (c.consume('/')) {
        if (c.peek() < '0' || c.peek() > '9') throw ParseError("expected digit", c.pos);
        den = 0;
        while (c.peek() >= '0' && c.peek() <= '9') {
            den = den * 10 + (c.peek() - '0');
            ++c.pos;
        }
        if (den == 0) throw ParseError("zero denominator", c.pos - 1);
    }
    Rational r(num, den);
    return neg ? Rational(-r) : r;
}

// One signed term: "sqrt2", "r/s*sqrt2" or "p/q". Exactly one rational-only
// and one sqrt2 term may appear per scalar, in either order.
inline QRoot2 parse_exact_term(Cursor& c, bool* is_sqrt2_term) {
    bool neg = false;
    if (c.peek() == '-' || c.peek() == '+') neg = c.s[c.pos++] == '-';
    if (c.consume_word("sqrt2")) {
        *is_sqrt2_term = true;
        return {0, neg ? -1 : 1};
    }
    Rational r = parse_rational(c);
    if (neg) r = -r;
    if (c.consume('*')) {
        if (!c.consume_word("sqrt2")) throw ParseError("expected sqrt2 after '*'", c.pos);
        *is_sqrt2_term = true;
        return {0, r};
    }
    *is_sqrt2_term = false;
    return {r, 0};
}

inline QRoot2 parse_exact_scalar(Cursor& c) {
    bool first_is_sqrt2 = false;
    QRoot2 v = parse_exact_term(c, &first_is_sqrt2);
    if (c.peek() == '+' || c.peek() == '-') {
        const std::size_t mark = c.pos;
        bool second_is_sqrt2 = false;
        const QRoot2 w = parse_exact_term(c, &second_is_sqrt2);
        if (second_is_sqrt2 == first_is_sqrt2)
            throw ParseError(first_is_sqrt2 ? "duplicate sqrt2 term" : "duplicate rational term",
                             mark);
        v += w;
    }
    return v;
}

inline double parse_float_scalar(Cursor& c) {
    c.consume('+');  // from_chars accepts '-' but not '+'
    double value = 0.0;
    const char* begin = c.s.data() + c.pos;
    const char* end = c.s.data() + c.s.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin) throw ParseError("expected number", c.pos);
    if (!std::isfinite(value)) throw ParseError("number is not finite", c.pos);
    c.pos += static_cast<std::size_t>(ptr - begin);
    return value;
}

template <ScalarBackend S>
S parse_scalar(Cursor& c) {
    if constexpr (ScalarOps<S>::exact)
        return parse_exact_scalar(c);
    else
        return parse_float_scalar(c);
}

}  // namespace detail

// Parses "[x1, xi, xj, xk]"; the whole input must be consumed.
template <ScalarBackend S>
Element<S> parse_element(std::string_view text) {
    detail::Cursor c{text};
    c.skip_ws();
    c.expect('[', "'['");
    Element<S> x;
    S* coords[4] = {&x.x1, &x.xi, &x.xj, &x.xk};
    for (int i = 0; i < 4; ++i) {
        c.skip_ws();
        *coords[i] = detail::parse_scalar<S>(c);
        c.skip_ws();
        if (i < 3) c.expect(',', "','");
    }
    c.expect(']', "']'");
    c.skip_ws();
    if (!c.done()) throw ParseError("unexpected trailing text", c.pos);
    return x;
}

// Parses a single scalar; the whole input must be consumed.
template <ScalarBackend S>
S parse_scalar_text(std::string_view text) {
    detail::Cursor c{text};
    c.skip_ws();
    const S v = detail::parse_scalar<S>(c);
    c.skip_ws();
    if (!c.done()) throw ParseError("unexpected trailing text", c.pos);
    return v;
}

}  // namespace walg
