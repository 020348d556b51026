#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace qumbral {

/// Dense univariate polynomial, ascending coefficients: index i holds the
/// coefficient of x^i. Trailing zeros are trimmed, so representations are
/// canonical; the zero polynomial is the empty list and has degree -1.
///
/// T only needs ring operations (+, -, *, ==, default-constructed zero), so
/// polynomial<polynomial<rational>> serves as a two-variable layer.
template <class T>
class polynomial {
public:
    polynomial() = default;
    polynomial(const T& constant) : c_{constant} { trim(); }
    polynomial(std::initializer_list<T> cs) : c_(cs) { trim(); }
    explicit polynomial(std::vector<T> cs) : c_(std::move(cs)) { trim(); }

    static polynomial monomial(int deg, const T& coeff = T(1)) {
        std::vector<T> cs(static_cast<std::size_t>(deg) + 1, T());
        cs.back() = coeff;
        return polynomial(std::move(cs));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    const std::vector<T>& coeffs() const { return c_; }

    T coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return T();
        return c_[static_cast<std::size_t>(i)];
    }

    const T& leading() const {
        if (c_.empty()) throw error("polynomial: leading coefficient of zero");
        return c_.back();
    }

    polynomial operator-() const {
        std::vector<T> out(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) out[i] = -c_[i];
        return polynomial(std::move(out));
    }

    polynomial& operator+=(const polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    polynomial& operator-=(const polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }

    friend polynomial operator+(polynomial a, const polynomial& b) { return a += b; }
    friend polynomial operator-(polynomial a, const polynomial& b) { return a -= b; }

    friend polynomial operator*(const polynomial& a, const polynomial& b) {
        if (a.is_zero() || b.is_zero()) return polynomial();
        std::vector<T> out(a.c_.size() + b.c_.size() - 1, T());
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        return polynomial(std::move(out));
    }

    /// Coefficientwise scale by a ring element.
    polynomial scaled(const T& s) const {
        if (s == T()) return polynomial();
        std::vector<T> out(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] * s;
        return polynomial(std::move(out));
    }

    /// Multiplication by x^k (index shift).
    polynomial shifted_up(int k) const {
        if (is_zero() || k == 0) return *this;
        std::vector<T> out(c_.size() + static_cast<std::size_t>(k), T());
        for (std::size_t i = 0; i < c_.size(); ++i) out[i + static_cast<std::size_t>(k)] = c_[i];
        return polynomial(std::move(out));
    }

    /// Horner evaluation, exact.
    T eval(const T& at) const {
        T acc{};
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * at + c_[i];
        return acc;
    }

    /// Substitution f(g), exact.
    polynomial compose(const polynomial& g) const {
        polynomial acc;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * g + polynomial(c_[i]);
        return acc;
    }

    /// Classical derivative.
    polynomial derivative() const {
        if (c_.size() <= 1) return polynomial();
        std::vector<T> out(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            out[i - 1] = c_[i] * T(static_cast<long>(i));
        return polynomial(std::move(out));
    }

    friend bool operator==(const polynomial& a, const polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const polynomial& a, const polynomial& b) { return a.c_ != b.c_; }

private:
    void trim() {
        while (!c_.empty() && c_.back() == T()) c_.pop_back();
    }

    std::vector<T> c_;
};

template <class T>
polynomial<T> operator*(const T& s, const polynomial<T>& p) {
    return p.scaled(s);
}
template <class T>
polynomial<T> operator*(const polynomial<T>& p, const T& s) {
    return p.scaled(s);
}

using poly = polynomial<rational>;

/// x^e as a power of the polynomial base; exact, used by oracles and parsing.
template <class T>
polynomial<T> poly_pow(const polynomial<T>& base, unsigned e) {
    polynomial<T> acc(T(1));
    for (unsigned i = 0; i < e; ++i) acc = acc * base;
    return acc;
}

}  // namespace qumbral
