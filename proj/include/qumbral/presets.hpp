#pragma once

#include <utility>
#include <vector>

#include "basis.hpp"
#include "context.hpp"
#include "errors.hpp"
#include "psi.hpp"
#include "rational.hpp"

namespace qumbral {
namespace presets {

/// psi_n = 1/n!.
inline std::vector<rational> classical_psi_table(int cap) {
    std::vector<rational> v;
    v.reserve(static_cast<std::size_t>(cap) + 1);
    for (int n = 0; n <= cap; ++n) v.push_back(factorial(static_cast<unsigned>(n)).reciprocal());
    return v;
}

/// psi_n = 1/n_q! with n_q = 1 + q + ... + q^{n-1}, evaluated as the literal
/// sum so q = 1 degenerates to the classical table instead of a singularity.
/// Throws not_admissible when some n_q vanishes (q = -1, for instance).
inline std::vector<rational> jackson_psi_table(const rational& q, int cap) {
    std::vector<rational> v;
    v.reserve(static_cast<std::size_t>(cap) + 1);
    v.push_back(rational(1));
    rational nq(0), qpow(1), fact(1);
    for (int n = 1; n <= cap; ++n) {
        nq += qpow;  // n_q = (n-1)_q + q^{n-1}
        qpow *= q;
        if (nq.is_zero())
            throw not_admissible("jackson: " + std::to_string(n) + "_q = 0 at q = " +
                                 q.to_string());
        fact *= nq;
        v.push_back(fact.reciprocal());
    }
    return v;
}

/// Q = d/dx on the monomial basis: the classical calculus.
inline q_context classical(int cap) {
    return q_context(psi_sequence(classical_psi_table(cap)), basic_sequence::monomials(cap), cap);
}

/// Q = Jackson's derivative (f(x) - f(qx)) / ((1-q)x) on the monomial basis.
inline q_context jackson(const rational& q, int cap) {
    return q_context(psi_sequence(jackson_psi_table(q, cap)), basic_sequence::monomials(cap), cap);
}

/// Q = the psi-derivative d_psi x^n = n_psi x^{n-1} for a caller-supplied
/// admissible psi, on the monomial basis.
inline q_context psi_derivative(psi_sequence psi, int cap) {
    return q_context(std::move(psi), basic_sequence::monomials(cap), cap);
}

/// Q = the forward difference f(x+1) - f(x): classical psi with the falling
/// factorial basis q_n = x(x-1)...(x-n+1). Not one of the calculus' textbook
/// cases; exercises a genuinely non-monomial basic sequence.
inline q_context forward_difference(int cap) {
    return q_context(psi_sequence(classical_psi_table(cap)),
                     basic_sequence::falling_factorials(cap), cap);
}

}  // namespace presets
}  // namespace qumbral
