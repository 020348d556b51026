#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "errors.hpp"
#include "poly.hpp"
#include "rational.hpp"

namespace qumbral {

/// Recursive-descent parser for polynomial expressions in x.
///
/// Grammar (whitespace-insensitive):
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := '-' factor | atom ['^' INT] ['/' INT]
///   atom   := INT | 'x' | '(' expr ')'
/// Exponents are literal nonnegative integers; the postfix '/ INT' divides by
/// a nonzero integer literal, which is how rendered output like "x^3/3" reads
/// back. The result is the unique canonical poly.
class poly_parser {
public:
    explicit poly_parser(std::string_view src) : src_(src) {}

    poly parse() {
        poly v = expr();
        skip_ws();
        if (pos_ != src_.size()) fail("unexpected trailing input");
        return v;
    }

private:
    poly expr() {
        skip_ws();
        bool neg = false;
        if (peek() == '+' || peek() == '-') neg = src_[pos_++] == '-';
        poly acc = term();
        if (neg) acc = -acc;
        while (true) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            poly t = term();
            if (c == '+')
                acc += t;
            else
                acc -= t;
        }
        return acc;
    }

    poly term() {
        poly acc = factor();
        while (true) {
            skip_ws();
            if (peek() != '*') break;
            ++pos_;
            acc = acc * factor();
        }
        return acc;
    }

    poly factor() {
        skip_ws();
        if (peek() == '-') {
            ++pos_;
            return -factor();
        }
        poly base = atom();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            if (peek() == '-') fail("negative exponent");
            long e = integer("exponent");
            if (e > 1024) fail("exponent too large");
            base = poly_pow(base, static_cast<unsigned>(e));
        }
        skip_ws();
        if (peek() == '/') {
            ++pos_;
            skip_ws();
            bool neg = false;
            if (peek() == '-') {
                neg = true;
                ++pos_;
            }
            long d = integer("divisor");
            if (d == 0) fail("division by zero");
            base = base.scaled(rational(neg ? -1 : 1, d));
        }
        return base;
    }

    poly atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            poly v = expr();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return v;
        }
        if (c == 'x') {
            ++pos_;
            return poly::monomial(1);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long n = integer("number");
            return poly(rational(n));
        }
        fail(c == '\0' ? "unexpected end of input" : "unexpected character");
    }

    long integer(const char* what) {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail(std::string("expected ") + what);
        long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (src_[pos_] - '0');
            if (v > 1000000000L) fail(std::string(what) + " too large");
            ++pos_;
        }
        return v;
    }

    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, pos_); }

    std::string_view src_;
    std::size_t pos_ = 0;
};

inline poly parse_poly(std::string_view src) { return poly_parser(src).parse(); }

}  // namespace qumbral
