#pragma once

#include <utility>
#include <vector>

#include "context.hpp"
#include "errors.hpp"
#include "poly.hpp"
#include "rational.hpp"

namespace qumbral {

/// Result of a Bernoulli-Taylor expansion of f about y to order n.
///
/// terms[k] is the k-th expansion term (a polynomial in x of degree <= k),
/// remainder is the order-(n+1) rest term, and reconstructed = sum of terms
/// plus remainder, which equals f exactly when everything is consistent.
struct taylor_expansion {
    rational y;
    int order = 0;
    std::vector<poly> terms;
    poly remainder;
    poly reconstructed;
    bool exact = false;  // reconstructed == f

    poly term_sum() const {
        poly acc;
        for (const poly& t : terms) acc += t;
        return acc;
    }
};

namespace detail {

/// Polynomials in two variables, used only for the rest-term integral: the
/// outer layer is the integration variable t, the inner layer is x.
using two_var = polynomial<poly>;

/// xp(x) placed on every t-coefficient of tp: xp tensor tp.
inline two_var tensor(const poly& xp, const poly& tp) {
    std::vector<poly> out(static_cast<std::size_t>(tp.degree()) + 1);
    for (int m = 0; m <= tp.degree(); ++m) out[static_cast<std::size_t>(m)] = xp.scaled(tp.coeff(m));
    return two_var(std::move(out));
}

/// Q-antiderivative in the t-layer; x-coefficients ride along.
inline two_var integrate_t(const q_context& ctx, const two_var& h) {
    two_var acc;
    for (int m = 0; m <= h.degree(); ++m) {
        const poly& pm = h.coeff(m);
        if (pm.is_zero()) continue;
        acc += tensor(pm, ctx.q_antiderivative(poly::monomial(m)));
    }
    return acc;
}

/// Evaluate the t-layer at a scalar: sum_m p_m(x) y^m.
inline poly eval_t(const two_var& h, const rational& y) {
    poly acc;
    rational ym(1);
    for (int m = 0; m <= h.degree(); ++m) {
        acc += h.coeff(m).scaled(ym);
        if (m < h.degree()) ym *= y;
    }
    return acc;
}

/// Evaluate the t-layer at the variable x itself: sum_m p_m(x) x^m.
inline poly eval_t_diagonal(const two_var& h) {
    poly acc;
    for (int m = 0; m <= h.degree(); ++m) acc += h.coeff(m).shifted_up(m);
    return acc;
}

/// The two-variable binomial kernel (x - t)^{k*_Q} applied to a t-layer
/// polynomial g: (Yhat - xhat_t)^k g(t), expanded over the commuting pair
/// Yhat = x-hat on the x-layer, xhat_t = x-hat on the t-layer. xhat_iters
/// must hold x-hat^m g for m = 0..k.
inline two_var binomial_kernel(const q_context& ctx, int k, const std::vector<poly>& xhat_iters) {
    two_var acc;
    for (int j = 0; j <= k; ++j) {
        const poly& tpart = xhat_iters[static_cast<std::size_t>(k - j)];
        if (tpart.is_zero()) continue;
        rational c = binomial(static_cast<unsigned>(k), static_cast<unsigned>(j));
        if ((k - j) % 2 != 0) c = -c;
        acc += tensor(ctx.q_power(j).scaled(c), tpart);
    }
    return acc;
}

/// x-hat iterates x-hat^m g for m = 0..count.
inline std::vector<poly> xhat_iterates(const q_context& ctx, const poly& g, int count) {
    std::vector<poly> out;
    out.reserve(static_cast<std::size_t>(count) + 1);
    out.push_back(g);
    for (int m = 1; m <= count; ++m) out.push_back(ctx.apply_xhat(out.back()));
    return out;
}

}  // namespace detail

/// Residual of Viskov's Bernoulli identity for p-hat = Q, q-hat = x-hat - y:
/// LHS(f) - RHS(f) with LHS = Q sum_{k<=n} (y - x-hat)^k Q^k / k! and
/// RHS = (y - x-hat)^n Q^{n+1} / n!. Identically zero for a correct calculus.
inline poly viskov_residual(const q_context& ctx, int n, const rational& y, const poly& f) {
    if (n < 0) throw order_overflow("viskov_residual: order must be >= 0");
    if (f.degree() + 1 > ctx.cap())
        throw degree_overflow("viskov_residual: deg f + 1 exceeds cap");

    auto shifted = [&](poly u, int k) {  // (y - x-hat)^k u
        for (int i = 0; i < k; ++i) u = u.scaled(y) - ctx.apply_xhat(u);
        return u;
    };

    poly inner;
    poly u = f;
    for (int k = 0; k <= n; ++k) {
        if (u.is_zero()) break;
        inner += shifted(u, k).scaled(factorial(static_cast<unsigned>(k)).reciprocal());
        u = ctx.apply_q(u);
    }
    poly lhs = ctx.apply_q(inner);

    poly qn1 = f;
    for (int k = 0; k < n + 1 && !qn1.is_zero(); ++k) qn1 = ctx.apply_q(qn1);
    poly rhs = shifted(qn1, n).scaled(factorial(static_cast<unsigned>(n)).reciprocal());
    return lhs - rhs;
}

/// The Cauchy-type rest term of order n+1 for f about y.
///
/// Two pieces, both exact:
///   - the definite Q-integral (1/n!) int_y^x (x-t)^{n*_Q} *_Q (Q^{n+1}f)(t) d_Q t,
///     computed in the two-variable layer and evaluated at the endpoints;
///   - a transport correction sum_{k>n} (1/k!) [(x-t)^{k*_Q} *_Q (Q^k f)(t)]
///     evaluated on the diagonal t = x, which vanishes for the classical
///     calculus and whenever n >= deg f.
/// Their sum is what makes the expansion reconstruct f exactly.
inline poly cauchy_remainder(const q_context& ctx, const poly& f, const rational& y, int n) {
    if (n < 0) throw order_overflow("cauchy_remainder: order must be >= 0");
    if (f.degree() > ctx.cap() - 1) throw degree_overflow("cauchy_remainder: deg f exceeds cap - 1");
    if (n + 1 > ctx.cap()) throw order_overflow("cauchy_remainder: order + 1 exceeds cap");

    poly g = f;
    for (int k = 0; k < n + 1 && !g.is_zero(); ++k) g = ctx.apply_q(g);
    if (g.is_zero()) return poly();

    // Integral part.
    detail::two_var kernel = detail::binomial_kernel(ctx, n, detail::xhat_iterates(ctx, g, n));
    detail::two_var anti = detail::integrate_t(ctx, kernel);
    poly integral = (detail::eval_t_diagonal(anti) - detail::eval_t(anti, y))
                        .scaled(factorial(static_cast<unsigned>(n)).reciprocal());

    // Transport part: diagonal defect of the truncated expansion kernel.
    poly transport;
    poly v = g;  // Q^{n+1} f
    for (int k = n + 1; !v.is_zero(); ++k) {
        std::vector<poly> iters = detail::xhat_iterates(ctx, v, k);
        poly diag;
        for (int j = 0; j <= k; ++j) {
            const poly& tpart = iters[static_cast<std::size_t>(k - j)];
            if (tpart.is_zero()) continue;
            rational c = binomial(static_cast<unsigned>(k), static_cast<unsigned>(j));
            if ((k - j) % 2 != 0) c = -c;
            diag += (ctx.q_power(j) * tpart).scaled(c);
        }
        transport += diag.scaled(factorial(static_cast<unsigned>(k)).reciprocal());
        v = ctx.apply_q(v);
    }
    return integral + transport;
}

/// Bernoulli-Taylor expansion of f about y to order n (Viskov's method).
///
/// terms[k] = (1/k!) (x - y)^{k*_Q} *_Q (Q^k f)(y), where the binomial power
/// is the two-variable kernel (Yhat - xhat_t)^k acting on (Q^k f)(t) and the
/// evaluation at t = y happens after the operators act. In the classical
/// calculus this is the textbook f^(k)(y) (x-y)^k / k!, and terms[0] = f(y)
/// always. The remainder is cauchy_remainder; reconstructed = f holds
/// exactly for every admissible context.
inline taylor_expansion bernoulli_taylor(const q_context& ctx, const poly& f, const rational& y,
                                         int n) {
    if (n < 0) throw order_overflow("bernoulli_taylor: order must be >= 0");
    if (f.degree() > ctx.cap() - 1)
        throw degree_overflow("bernoulli_taylor: deg f exceeds cap - 1");
    if (n + 1 > ctx.cap()) throw order_overflow("bernoulli_taylor: order + 1 exceeds cap");

    taylor_expansion out;
    out.y = y;
    out.order = n;
    out.terms.assign(static_cast<std::size_t>(n) + 1, poly());

    poly u = f;
    for (int k = 0; k <= n; ++k) {
        if (u.is_zero()) break;
        std::vector<poly> iters = detail::xhat_iterates(ctx, u, k);
        poly term;
        for (int j = 0; j <= k; ++j) {
            rational val = iters[static_cast<std::size_t>(k - j)].eval(y);
            if (val.is_zero()) continue;
            rational c = binomial(static_cast<unsigned>(k), static_cast<unsigned>(j)) * val;
            if ((k - j) % 2 != 0) c = -c;
            term += ctx.q_power(j).scaled(c);
        }
        out.terms[static_cast<std::size_t>(k)] =
            term.scaled(factorial(static_cast<unsigned>(k)).reciprocal());
        u = ctx.apply_q(u);
    }

    out.remainder = cauchy_remainder(ctx, f, y, n);
    out.reconstructed = out.term_sum() + out.remainder;
    out.exact = out.reconstructed == f;
    return out;
}

}  // namespace qumbral
