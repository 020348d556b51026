#pragma once

#include <string>
#include <vector>

#include "poly.hpp"
#include "rational.hpp"

namespace qumbral {

/// Human-readable rendering, highest degree first: "x^3 - 3*x + 2",
/// "2*x^3/7", "x^2/3 - 2*x + 1". Always re-parseable by parse_poly.
inline std::string render_poly(const poly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (int i = f.degree(); i >= 0; --i) {
        rational c = f.coeff(i);
        if (c.is_zero()) continue;
        bool negative = c.sign() < 0;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        rational m = negative ? -c : c;
        std::string num = m.numerator_str();
        std::string piece;
        if (i == 0) {
            piece = m.to_string();
        } else {
            if (num != "1") piece = num + "*";
            piece += "x";
            if (i > 1) piece += "^" + std::to_string(i);
            if (!m.is_integer()) piece += "/" + m.denominator_str();
        }
        out += piece;
    }
    return out;
}

/// Ascending coefficient strings, the JSON wire form: x^2 - 1 is ["-1","0","1"].
inline std::vector<std::string> poly_coeff_strings(const poly& f) {
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(f.degree()) + 1);
    for (int i = 0; i <= f.degree(); ++i) out.push_back(f.coeff(i).to_string());
    return out;
}

}  // namespace qumbral
