#pragma once

#include <utility>
#include <vector>

#include "errors.hpp"
#include "poly.hpp"

namespace qumbral {

/// Normal sequence of polynomials: deg q_n = n, q_0 = 1, q_n(0) = 0 for n >= 1.
class basic_sequence {
public:
    explicit basic_sequence(std::vector<poly> polys) : q_(std::move(polys)) {
        if (q_.empty()) throw invalid_basis("basic sequence is empty");
        for (std::size_t n = 0; n < q_.size(); ++n) {
            if (q_[n].degree() != static_cast<int>(n))
                throw invalid_basis("deg q_" + std::to_string(n) + " != " + std::to_string(n));
            if (n == 0 && !q_[0].coeff(0).is_one())
                throw invalid_basis("q_0 must be the constant 1");
            if (n >= 1 && !q_[n].coeff(0).is_zero())
                throw invalid_basis("q_" + std::to_string(n) + "(0) != 0");
        }
    }

    int cap() const { return static_cast<int>(q_.size()) - 1; }

    const poly& at(int n) const {
        if (n < 0 || n > cap())
            throw out_of_range("basic sequence index " + std::to_string(n) + " outside 0.." +
                               std::to_string(cap()));
        return q_[static_cast<std::size_t>(n)];
    }

    const std::vector<poly>& polys() const { return q_; }

    /// q_n = x^n.
    static basic_sequence monomials(int cap) {
        std::vector<poly> q;
        q.reserve(static_cast<std::size_t>(cap) + 1);
        for (int n = 0; n <= cap; ++n) q.push_back(poly::monomial(n));
        return basic_sequence(std::move(q));
    }

    /// q_n = x(x-1)...(x-n+1).
    static basic_sequence falling_factorials(int cap) {
        std::vector<poly> q;
        q.reserve(static_cast<std::size_t>(cap) + 1);
        poly acc(rational(1));
        q.push_back(acc);
        for (int n = 1; n <= cap; ++n) {
            acc = acc * poly{rational(-(n - 1)), rational(1)};
            q.push_back(acc);
        }
        return basic_sequence(std::move(q));
    }

private:
    std::vector<poly> q_;
};

}  // namespace qumbral
