#pragma once

#include "context.hpp"
#include "poly.hpp"
#include "rational.hpp"

namespace qumbral {

/// Q-antiderivative: the linear right inverse of Q with F(0) = 0.
inline poly q_antiderivative(const q_context& ctx, const poly& f) {
    return ctx.q_antiderivative(f);
}

/// Definite Q-integral as an antiderivative difference F(b) - F(a).
inline rational q_integral_definite(const q_context& ctx, const poly& f, const rational& a,
                                    const rational& b) {
    poly F = ctx.q_antiderivative(f);
    return F.eval(b) - F.eval(a);
}

}  // namespace qumbral
