#pragma once

#include <string>
#include <utility>
#include <vector>

#include "basis.hpp"
#include "errors.hpp"
#include "poly.hpp"
#include "psi.hpp"
#include "rational.hpp"

namespace qumbral {

/// One instance of the operator calculus, truncated at a fixed degree cap:
/// an admissible psi-sequence together with a psi-basic sequence {q_n},
/// giving the generalized differential operator Q (Q q_n = n_psi q_{n-1}),
/// its dual multiplication operator x-hat (q_n -> (n+1)/(n+1)_psi q_{n+1}),
/// the star product f *_Q g = f(x-hat) g, the generalized translation, and
/// the Q-antiderivative.
///
/// Degree-raising past the cap is a hard error (degree_overflow), never a
/// silent truncation. Instances are immutable after construction and safe to
/// share across threads; every operation is a pure function.
class q_context {
public:
    q_context(psi_sequence psi, basic_sequence basis, int cap)
        : psi_(std::move(psi)), basis_(std::move(basis)), cap_(cap) {
        if (cap_ < 1) throw cap_mismatch("context cap must be >= 1");
        if (psi_.cap() < cap_)
            throw cap_mismatch("psi table stops at " + std::to_string(psi_.cap()) +
                               ", context needs " + std::to_string(cap_));
        if (basis_.cap() < cap_)
            throw cap_mismatch("basic sequence stops at " + std::to_string(basis_.cap()) +
                               ", context needs " + std::to_string(cap_));

        scale_.resize(static_cast<std::size_t>(cap_) + 1);
        for (int n = 0; n <= cap_; ++n) scale_[static_cast<std::size_t>(n)] = psi_.n_psi(n);

        monomial_ = true;
        for (int n = 0; n <= cap_ && monomial_; ++n)
            monomial_ = basis_.at(n) == poly::monomial(n);

        if (!monomial_) {
            basis_matrix_.assign(static_cast<std::size_t>(cap_) + 1,
                                 std::vector<rational>(static_cast<std::size_t>(cap_) + 1));
            for (int j = 0; j <= cap_; ++j)
                for (int i = 0; i <= j; ++i)
                    basis_matrix_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                        basis_.at(j).coeff(i);
        }

        q_powers_.reserve(static_cast<std::size_t>(cap_) + 1);
        q_powers_.push_back(poly(rational(1)));
        for (int n = 1; n <= cap_; ++n) q_powers_.push_back(apply_xhat(q_powers_.back()));

        q_on_mono_.reserve(static_cast<std::size_t>(cap_) + 1);
        for (int n = 0; n <= cap_; ++n) q_on_mono_.push_back(apply_q(poly::monomial(n)));

        antider_mono_.reserve(static_cast<std::size_t>(cap_));
        for (int n = 0; n <= cap_ - 1; ++n) {
            std::vector<rational> c = to_basic(poly::monomial(n));
            std::vector<rational> d(c.size() + 1);
            for (std::size_t m = 0; m < c.size(); ++m) d[m + 1] = c[m] / scale_[m + 1];
            antider_mono_.push_back(from_basic(d));
        }
    }

    int cap() const { return cap_; }
    const psi_sequence& psi() const { return psi_; }
    const basic_sequence& basis() const { return basis_; }
    bool monomial_basis() const { return monomial_; }

    /// Coordinates of f in the basic sequence: f = sum c_n q_n. The system is
    /// triangular with nonzero diagonal (deg q_n = n), solved top-down.
    std::vector<rational> to_basic(const poly& f) const {
        if (f.degree() > cap_) throw degree_overflow(overflow_msg("to_basic", f.degree()));
        std::vector<rational> a(f.coeffs());
        if (monomial_) return a;
        std::vector<rational> c(a.size());
        for (std::size_t ii = a.size(); ii-- > 0;) {
            const rational& diag = basis_matrix_[ii][ii];
            c[ii] = a[ii] / diag;
            for (std::size_t r = 0; r < ii; ++r) a[r] -= basis_matrix_[r][ii] * c[ii];
        }
        return c;
    }

    poly from_basic(const std::vector<rational>& coords) const {
        if (static_cast<int>(coords.size()) > cap_ + 1)
            throw degree_overflow(overflow_msg("from_basic", static_cast<int>(coords.size()) - 1));
        if (monomial_) return poly(coords);
        poly acc;
        for (std::size_t n = 0; n < coords.size(); ++n)
            if (!coords[n].is_zero()) acc += basis_.at(static_cast<int>(n)).scaled(coords[n]);
        return acc;
    }

    /// The generalized differential operator Q. Linear, lowers degree by
    /// exactly one, annihilates constants.
    poly apply_q(const poly& f) const {
        if (f.degree() > cap_) throw degree_overflow(overflow_msg("apply_q", f.degree()));
        if (f.degree() <= 0) return poly();
        std::vector<rational> c = to_basic(f);
        std::vector<rational> d(c.size() - 1);
        for (std::size_t m = 0; m + 1 < c.size(); ++m) d[m] = c[m + 1] * scale_[m + 1];
        return from_basic(d);
    }

    /// The dual operator x-hat: q_n -> (n+1)/(n+1)_psi q_{n+1}. Raises degree
    /// by exactly one, so the argument must stay below the cap.
    poly apply_xhat(const poly& f) const {
        if (f.degree() > cap_ - 1) throw degree_overflow(overflow_msg("apply_xhat", f.degree()));
        if (f.is_zero()) return poly();
        std::vector<rational> c = to_basic(f);
        std::vector<rational> d(c.size() + 1);
        for (std::size_t m = 0; m < c.size(); ++m)
            d[m + 1] = c[m] * rational(static_cast<long>(m) + 1) / scale_[m + 1];
        return from_basic(d);
    }

    /// x^{n*_Q} = x-hat^n 1 = (n!/n_psi!) q_n; cached at construction.
    const poly& q_power(int n) const {
        if (n < 0 || n > cap_) throw degree_overflow(overflow_msg("q_power", n));
        return q_powers_[static_cast<std::size_t>(n)];
    }

    /// (x - y)^{k*_Q} as a polynomial: (x-hat - y)^k applied to 1.
    poly shifted_q_power(int k, const rational& y) const {
        if (k < 0 || k > cap_) throw degree_overflow(overflow_msg("shifted_q_power", k));
        poly u(rational(1));
        for (int i = 0; i < k; ++i) u = apply_xhat(u) - u.scaled(y);
        return u;
    }

    /// f *_Q g = f(x-hat) g, f read in monomial coordinates; linear in g.
    /// Evaluated by operator Horner: x-hat is linear, so
    /// f(x-hat) g = c_0 g + x-hat(c_1 g + x-hat(c_2 g + ...)).
    poly star_product(const poly& f, const poly& g) const {
        if (f.is_zero() || g.is_zero()) return poly();
        if (f.degree() + g.degree() > cap_)
            throw degree_overflow(overflow_msg("star_product", f.degree() + g.degree()));
        poly acc = g.scaled(f.leading());
        for (int k = f.degree() - 1; k >= 0; --k) {
            acc = apply_xhat(acc);
            const rational& ck = f.coeffs()[static_cast<std::size_t>(k)];
            if (!ck.is_zero()) acc += g.scaled(ck);
        }
        return acc;
    }

    /// Generalized translation E^y f = sum_k q_k(y) (Q^k f) / k_psi!.
    /// Finite on polynomials since Q is nilpotent; reduces to f(x + y) in the
    /// classical calculus.
    poly translate(const rational& y, const poly& f) const {
        if (f.degree() > cap_) throw degree_overflow(overflow_msg("translate", f.degree()));
        poly acc = f;
        poly u = f;
        for (int k = 1; k <= f.degree(); ++k) {
            u = apply_q(u);
            rational w = psi_.value(k) * basis_.at(k).eval(y);
            if (!w.is_zero()) acc += u.scaled(w);
        }
        return acc;
    }

    /// Truncated exp_{Q,psi}[alpha x] = sum_{k<=m} alpha^k q_k(x) / k_psi!.
    poly q_exp_truncated(const rational& alpha, int m) const {
        if (m < 0 || m > cap_) throw degree_overflow(overflow_msg("q_exp_truncated", m));
        poly acc;
        rational ak(1);
        for (int k = 0; k <= m; ++k) {
            acc += basis_.at(k).scaled(ak * psi_.value(k));
            if (k < m) ak *= alpha;
        }
        return acc;
    }

    /// The linear right inverse of Q pinned by F(0) = 0:
    /// q_n -> q_{n+1} / (n+1)_psi. Cached per monomial at construction.
    poly q_antiderivative(const poly& f) const {
        if (f.degree() > cap_ - 1)
            throw degree_overflow(overflow_msg("q_antiderivative", f.degree()));
        poly acc;
        for (int i = 0; i <= f.degree(); ++i) {
            const rational& ci = f.coeffs()[static_cast<std::size_t>(i)];
            if (!ci.is_zero()) acc += antider_mono_[static_cast<std::size_t>(i)].scaled(ci);
        }
        return acc;
    }

    /// Q's action on each monomial x^n, as computed at construction.
    const std::vector<poly>& q_on_monomials() const { return q_on_mono_; }

    /// Test hook: bumps one cached n_psi scale entry so the live operators
    /// disagree with the build-time caches. Used by the CLI mutation test.
    void corrupt_n_psi_for_testing(int n) {
        if (n < 1 || n > cap_) throw out_of_range("corrupt_n_psi_for_testing: bad index");
        rational& s = scale_[static_cast<std::size_t>(n)];
        s += rational(1);
        if (s.is_zero()) s += rational(1);
    }

private:
    std::string overflow_msg(const char* op, int deg) const {
        return std::string(op) + ": degree " + std::to_string(deg) + " exceeds what cap " +
               std::to_string(cap_) + " allows";
    }

    psi_sequence psi_;
    basic_sequence basis_;
    int cap_;
    bool monomial_ = false;
    std::vector<rational> scale_;                     // n_psi, read live by the operators
    std::vector<std::vector<rational>> basis_matrix_; // coeff i of q_j; empty for monomials
    std::vector<poly> q_powers_;
    std::vector<poly> q_on_mono_;
    std::vector<poly> antider_mono_;
};

/// Markowsky's converse direction: a degree-lowering linear operator, given by
/// its action on monomials, determines its psi-basic sequence uniquely once
/// q_n(0) = 0 pins the integration constants. Solves Q q_n = n_psi q_{n-1}
/// degree by degree.
inline basic_sequence basic_from_operator(const std::vector<poly>& q_action,
                                          const psi_sequence& psi, int cap) {
    if (cap < 1) throw cap_mismatch("basic_from_operator: cap must be >= 1");
    if (static_cast<int>(q_action.size()) < cap + 1)
        throw cap_mismatch("basic_from_operator: action table stops before cap");
    if (psi.cap() < cap) throw cap_mismatch("basic_from_operator: psi table stops before cap");
    if (!q_action[0].is_zero())
        throw not_degree_lowering("operator does not annihilate constants");
    for (int i = 1; i <= cap; ++i)
        if (q_action[static_cast<std::size_t>(i)].degree() != i - 1)
            throw not_degree_lowering("deg(Q x^" + std::to_string(i) + ") != " +
                                      std::to_string(i - 1));

    std::vector<poly> q;
    q.reserve(static_cast<std::size_t>(cap) + 1);
    q.push_back(poly(rational(1)));
    for (int n = 1; n <= cap; ++n) {
        poly rhs = q.back().scaled(psi.n_psi(n));
        std::vector<rational> a(static_cast<std::size_t>(n) + 1);  // a[0] stays 0
        for (int i = n; i >= 1; --i) {
            const poly& act = q_action[static_cast<std::size_t>(i)];
            rational ai = rhs.coeff(i - 1) / act.leading();
            a[static_cast<std::size_t>(i)] = ai;
            if (!ai.is_zero()) rhs -= act.scaled(ai);
        }
        if (!rhs.is_zero())
            throw unsolvable("no polynomial solves Q q_" + std::to_string(n) + " = " +
                             std::to_string(n) + "_psi q_" + std::to_string(n - 1));
        q.push_back(poly(std::move(a)));
    }
    return basic_sequence(std::move(q));
}

}  // namespace qumbral
