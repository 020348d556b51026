#pragma once

#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace qumbral {

/// Admissible psi-sequence: psi_0 = 1 and psi_n != 0 for every stored index.
///
/// The deformed integers and factorials derive from the table:
///   n_psi  = psi_{n-1} / psi_n   (n >= 1; n_psi(0) = 0 by the Psi_{-n} = 0
///                                 convention),
///   n_psi! = n_psi (n-1)_psi ... 1_psi = 1 / psi_n.
/// Tables are finite, 0..cap; indices beyond cap are errors, not extensions.
class psi_sequence {
public:
    explicit psi_sequence(std::vector<rational> values) : values_(std::move(values)) {
        if (values_.empty()) throw not_admissible("psi table is empty");
        if (!values_.front().is_one())
            throw not_admissible("psi_0 must be 1, got " + values_.front().to_string());
        for (std::size_t n = 0; n < values_.size(); ++n)
            if (values_[n].is_zero())
                throw not_admissible("psi_" + std::to_string(n) + " is zero");
        n_psi_.resize(values_.size());
        factorial_.resize(values_.size());
        n_psi_[0] = rational(0);
        factorial_[0] = rational(1);
        for (std::size_t n = 1; n < values_.size(); ++n) {
            n_psi_[n] = values_[n - 1] / values_[n];
            factorial_[n] = factorial_[n - 1] * n_psi_[n];
        }
    }

    int cap() const { return static_cast<int>(values_.size()) - 1; }

    /// psi_n itself; note psi_n = 1 / n_psi!.
    const rational& value(int n) const {
        check(n);
        return values_[static_cast<std::size_t>(n)];
    }

    rational n_psi(int n) const {
        check(n);
        return n_psi_[static_cast<std::size_t>(n)];
    }

    const rational& factorial(int n) const {
        check(n);
        return factorial_[static_cast<std::size_t>(n)];
    }

    /// Falling factorial n_psi (n-1)_psi ... (n-k+1)_psi.
    rational falling(int n, int k) const {
        if (k < 0 || k > n) throw out_of_range("psi falling: need 0 <= k <= n");
        check(n);
        rational acc(1);
        for (int i = 0; i < k; ++i) acc *= n_psi_[static_cast<std::size_t>(n - i)];
        return acc;
    }

    /// psi-binomial: falling(n, k) / k_psi!.
    rational binomial(int n, int k) const { return falling(n, k) / factorial(k); }

    /// Partial sum of exp_psi{y}: sum_{k<=m} y^k / k_psi!.
    rational exp_truncated(const rational& y, int m) const {
        check(m);
        rational acc(0), yk(1);
        for (int k = 0; k <= m; ++k) {
            acc += yk * values_[static_cast<std::size_t>(k)];
            if (k < m) yk *= y;
        }
        return acc;
    }

private:
    void check(int n) const {
        if (n < 0 || n > cap())
            throw out_of_range("psi index " + std::to_string(n) + " outside 0.." +
                               std::to_string(cap()));
    }

    std::vector<rational> values_;
    std::vector<rational> n_psi_;
    std::vector<rational> factorial_;
};

}  // namespace qumbral
