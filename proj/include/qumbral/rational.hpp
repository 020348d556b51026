#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "errors.hpp"

namespace qumbral {

/// Exact rational scalar over arbitrary-precision integers.
///
/// Values are always canonical: denominator > 0, gcd(|num|, den) = 1, and
/// zero is 0/1. Serialized form is "num/den", or just "num" when den = 1.
class rational {
public:
    rational() : v_(0) {}
    rational(long n) : v_(n) {}
    rational(long num, long den) {
        if (den == 0) throw arithmetic_error("rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit rational(mpq_class v) : v_(std::move(v)) {
        if (v_.get_den() == 0) throw arithmetic_error("rational: zero denominator");
        v_.canonicalize();
    }

    /// Parses "num" or "num/den" (base 10, optional leading minus).
    static rational from_string(std::string_view s) {
        std::size_t slash = s.find('/');
        std::string num(s.substr(0, slash == std::string_view::npos ? s.size() : slash));
        std::string den(slash == std::string_view::npos ? "1" : s.substr(slash + 1));
        if (!looks_like_int(num) || !looks_like_int(den))
            throw parse_error("malformed rational '" + std::string(s) + "'", 0);
        mpq_class v;
        if (v.set_str(num + "/" + den, 10) != 0)
            throw parse_error("malformed rational '" + std::string(s) + "'", 0);
        if (v.get_den() == 0) throw arithmetic_error("rational: zero denominator");
        v.canonicalize();
        rational r;
        r.v_ = std::move(v);
        return r;
    }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    std::string numerator_str() const { return v_.get_num().get_str(); }
    std::string denominator_str() const { return v_.get_den().get_str(); }

    std::string to_string() const {
        return is_integer() ? numerator_str() : numerator_str() + "/" + denominator_str();
    }

    rational operator-() const { return wrap(-v_); }

    rational& operator+=(const rational& o) { v_ += o.v_; return *this; }
    rational& operator-=(const rational& o) { v_ -= o.v_; return *this; }
    rational& operator*=(const rational& o) { v_ *= o.v_; return *this; }
    rational& operator/=(const rational& o) {
        if (o.is_zero()) throw arithmetic_error("rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend rational operator+(rational a, const rational& b) { return a += b; }
    friend rational operator-(rational a, const rational& b) { return a -= b; }
    friend rational operator*(rational a, const rational& b) { return a *= b; }
    friend rational operator/(rational a, const rational& b) { return a /= b; }

    friend bool operator==(const rational& a, const rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const rational& a, const rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const rational& a, const rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const rational& a, const rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const rational& a, const rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const rational& a, const rational& b) { return a.v_ >= b.v_; }

    /// Integer power; negative exponents invert (throws on 0^negative).
    rational pow(long e) const {
        if (e < 0) {
            if (is_zero()) throw arithmetic_error("rational: zero to a negative power");
            return reciprocal().pow(-e);
        }
        mpz_class num, den;
        mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), static_cast<unsigned long>(e));
        return wrap(mpq_class(num) / mpq_class(den));
    }

    rational reciprocal() const {
        if (is_zero()) throw arithmetic_error("rational: reciprocal of zero");
        mpq_class r(v_);
        mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
        return wrap(std::move(r));
    }

    friend std::ostream& operator<<(std::ostream& os, const rational& r) {
        return os << r.to_string();
    }

private:
    static rational wrap(mpq_class v) {
        rational r;
        r.v_ = std::move(v);
        return r;
    }

    static bool looks_like_int(std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    }

    mpq_class v_;
};

/// n! as an exact rational.
inline rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return rational(mpq_class(f));
}

/// Ordinary binomial coefficient C(n, k), exact.
inline rational binomial(unsigned n, unsigned k) {
    if (k > n) return rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return rational(mpq_class(b));
}

}  // namespace qumbral
