#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "context.hpp"
#include "integral.hpp"
#include "io.hpp"
#include "poly.hpp"
#include "presets.hpp"
#include "rng.hpp"
#include "taylor.hpp"

namespace qumbral {

struct verify_failure {
    std::string preset;
    std::uint64_t trial = 0;
    std::string input;
    std::string expected;
    std::string actual;
};

/// One suite's outcome. failures empty <=> the suite passed. elapsed_ms is
/// diagnostic only and never part of deterministic output.
struct verify_report {
    std::string suite;
    int trials = 0;
    std::uint64_t seed = 0;
    int checks = 0;
    long long elapsed_ms = 0;
    std::vector<verify_failure> failures;

    bool ok() const { return failures.empty(); }
};

struct preset_instance {
    std::string name;
    q_context ctx;
};

/// The fixed verification preset family: classical, jackson over the
/// admissible sample {2, 3/2, 1/3, -2}, and the forward difference.
inline std::vector<preset_instance> default_preset_set(int cap) {
    std::vector<preset_instance> out;
    out.push_back({"classical", presets::classical(cap)});
    out.push_back({"jackson:2", presets::jackson(rational(2), cap)});
    out.push_back({"jackson:3/2", presets::jackson(rational(3, 2), cap)});
    out.push_back({"jackson:1/3", presets::jackson(rational(1, 3), cap)});
    out.push_back({"jackson:-2", presets::jackson(rational(-2), cap)});
    out.push_back({"falling", presets::forward_difference(cap)});
    return out;
}

namespace verify_detail {

inline void record(verify_report& rep, const std::string& preset, std::uint64_t trial,
                   std::string input, std::string expected, std::string actual) {
    rep.failures.push_back(
        {preset, trial, std::move(input), std::move(expected), std::move(actual)});
}

inline std::uint64_t suite_seed(std::uint64_t seed, int suite_index, std::size_t preset_index) {
    return seed * 1000003ull + static_cast<std::uint64_t>(suite_index) * 101ull +
           static_cast<std::uint64_t>(preset_index);
}

}  // namespace verify_detail

/// Bernoulli-Taylor reconstruction: sum of terms + remainder == f, and the
/// remainder vanishes once n >= deg f.
inline verify_report suite_taylor(const std::vector<preset_instance>& ps, int trials,
                                  std::uint64_t seed, int max_deg) {
    verify_report rep{"taylor", trials, seed, 0, 0, {}};
    for (std::size_t pi = 0; pi < ps.size(); ++pi) {
        splitmix64 rng(verify_detail::suite_seed(seed, 1, pi));
        for (int t = 0; t < trials; ++t) {
            poly f = random_poly(rng, max_deg);
            rational y = random_rational(rng);
            int n = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_deg) + 3));
            taylor_expansion e = bernoulli_taylor(ps[pi].ctx, f, y, n);
            ++rep.checks;
            if (!e.exact)
                verify_detail::record(rep, ps[pi].name, static_cast<std::uint64_t>(t),
                                      "f=" + render_poly(f) + " y=" + y.to_string() +
                                          " n=" + std::to_string(n),
                                      render_poly(f), render_poly(e.reconstructed));
            if (n >= f.degree() && !e.remainder.is_zero())
                verify_detail::record(rep, ps[pi].name, static_cast<std::uint64_t>(t),
                                      "remainder degeneration f=" + render_poly(f) +
                                          " n=" + std::to_string(n),
                                      "0", render_poly(e.remainder));
        }
    }
    return rep;
}

/// Viskov residual identically zero.
inline verify_report suite_viskov(const std::vector<preset_instance>& ps, int trials,
                                  std::uint64_t seed, int max_deg) {
    verify_report rep{"viskov", trials, seed, 0, 0, {}};
    for (std::size_t pi = 0; pi < ps.size(); ++pi) {
        splitmix64 rng(verify_detail::suite_seed(seed, 2, pi));
        for (int t = 0; t < trials; ++t) {
            poly f = random_poly(rng, max_deg);
            rational y = random_rational(rng);
            int n = static_cast<int>(rng.below(9));
            poly r = viskov_residual(ps[pi].ctx, n, y, f);
            ++rep.checks;
            if (!r.is_zero())
                verify_detail::record(rep, ps[pi].name, static_cast<std::uint64_t>(t),
                                      "f=" + render_poly(f) + " y=" + y.to_string() +
                                          " n=" + std::to_string(n),
                                      "0", render_poly(r));
        }
    }
    return rep;
}

/// Q-Leibnitz rule Q(f *_Q g) = (Df) *_Q g + f *_Q (Qg), plus the operator
/// composition law f(xhat) g(xhat) 1 = f *_Q (g *_Q 1).
inline verify_report suite_leibniz(const std::vector<preset_instance>& ps, int trials,
                                   std::uint64_t seed, int max_deg) {
    verify_report rep{"leibniz", trials, seed, 0, 0, {}};
    int half = max_deg / 2 > 0 ? max_deg / 2 : 1;
    for (std::size_t pi = 0; pi < ps.size(); ++pi) {
        splitmix64 rng(verify_detail::suite_seed(seed, 3, pi));
        const q_context& ctx = ps[pi].ctx;
        for (int t = 0; t < trials; ++t) {
            poly f = random_poly(rng, half);
            poly g = random_poly(rng, half);
            poly lhs = ctx.apply_q(ctx.star_product(f, g));
            poly rhs = ctx.star_product(f.derivative(), g) + ctx.star_product(f, ctx.apply_q(g));
            ++rep.checks;
            if (lhs != rhs)
                verify_detail::record(rep, ps[pi].name, static_cast<std::uint64_t>(t),
                                      "leibniz f=" + render_poly(f) + " g=" + render_poly(g),
                                      render_poly(rhs), render_poly(lhs));
            poly comp_lhs = ctx.star_product(f, ctx.star_product(g, poly(rational(1))));
            poly via = ctx.star_product(g, poly(rational(1)));
            poly comp_rhs = ctx.star_product(f, via);
            ++rep.checks;
            if (comp_lhs != comp_rhs)
                verify_detail::record(rep, ps[pi].name, static_cast<std::uint64_t>(t),
                                      "composition f=" + render_poly(f) + " g=" + render_poly(g),
                                      render_poly(comp_rhs), render_poly(comp_lhs));
        }
    }
    return rep;
}

/// Integration per partes:
/// int_a^b (f *_Q Qg) = [(f *_Q g)]_a^b - int_a^b ((Df) *_Q g).
inline verify_report suite_perpartes(const std::vector<preset_instance>& ps, int trials,
                                     std::uint64_t seed, int max_deg) {
    verify_report rep{"perpartes", trials, seed, 0, 0, {}};
    int half = max_deg / 2 > 0 ? max_deg / 2 : 1;
    for (std::size_t pi = 0; pi < ps.size(); ++pi) {
        splitmix64 rng(verify_detail::suite_seed(seed, 4, pi));
        const q_context& ctx = ps[pi].ctx;
        for (int t = 0; t < trials; ++t) {
            poly f = random_poly(rng, half);
            poly g = random_poly(rng, half);
            rational a = random_rational(rng), b = random_rational(rng);
            poly fg = ctx.star_product(f, g);
            rational lhs = q_integral_definite(ctx, ctx.star_product(f, ctx.apply_q(g)), a, b);
            rational rhs = fg.eval(b) - fg.eval(a) -
                           q_integral_definite(ctx, ctx.star_product(f.derivative(), g), a, b);
            ++rep.checks;
            if (lhs != rhs)
                verify_detail::record(rep, ps[pi].name, static_cast<std::uint64_t>(t),
                                      "f=" + render_poly(f) + " g=" + render_poly(g) +
                                          " a=" + a.to_string() + " b=" + b.to_string(),
                                      rhs.to_string(), lhs.to_string());
        }
    }
    return rep;
}

/// [Q, xhat] = id on every basis element below the cap (deterministic).
inline verify_report suite_commutator(const std::vector<preset_instance>& ps, int /*trials*/,
                                      std::uint64_t seed, int /*max_deg*/) {
    verify_report rep{"commutator", 0, seed, 0, 0, {}};
    for (std::size_t pi = 0; pi < ps.size(); ++pi) {
        const q_context& ctx = ps[pi].ctx;
        for (int n = 0; n <= ctx.cap() - 1; ++n) {
            const poly& qn = ctx.basis().at(n);
            poly commut = ctx.apply_q(ctx.apply_xhat(qn)) - ctx.apply_xhat(ctx.apply_q(qn));
            ++rep.checks;
            ++rep.trials;
            if (commut != qn)
                verify_detail::record(rep, ps[pi].name, static_cast<std::uint64_t>(n),
                                      "[Q, xhat] q_" + std::to_string(n), render_poly(qn),
                                      render_poly(commut));
        }
    }
    return rep;
}

/// Markowsky round trip plus the caches it depends on: rebuilding the basic
/// sequence from the stored operator action reproduces it; the stored action
/// matches a live application; q_power matches its closed form (n!/n_psi!) q_n.
inline verify_report suite_markowsky(const std::vector<preset_instance>& ps, int /*trials*/,
                                     std::uint64_t seed, int /*max_deg*/) {
    verify_report rep{"markowsky", 0, seed, 0, 0, {}};
    for (std::size_t pi = 0; pi < ps.size(); ++pi) {
        const q_context& ctx = ps[pi].ctx;
        basic_sequence rebuilt = basic_from_operator(ctx.q_on_monomials(), ctx.psi(), ctx.cap());
        for (int n = 0; n <= ctx.cap(); ++n) {
            ++rep.checks;
            ++rep.trials;
            if (rebuilt.at(n) != ctx.basis().at(n))
                verify_detail::record(rep, ps[pi].name, static_cast<std::uint64_t>(n),
                                      "round trip q_" + std::to_string(n),
                                      render_poly(ctx.basis().at(n)), render_poly(rebuilt.at(n)));
            ++rep.checks;
            if (ctx.apply_q(poly::monomial(n)) != ctx.q_on_monomials()[static_cast<std::size_t>(n)])
                verify_detail::record(
                    rep, ps[pi].name, static_cast<std::uint64_t>(n),
                    "stored action on x^" + std::to_string(n),
                    render_poly(ctx.q_on_monomials()[static_cast<std::size_t>(n)]),
                    render_poly(ctx.apply_q(poly::monomial(n))));
            ++rep.checks;
            poly closed = ctx.basis().at(n).scaled(factorial(static_cast<unsigned>(n)) *
                                                   ctx.psi().factorial(n).reciprocal());
            if (ctx.q_power(n) != closed)
                verify_detail::record(rep, ps[pi].name, static_cast<std::uint64_t>(n),
                                      "q_power closed form n=" + std::to_string(n),
                                      render_poly(closed), render_poly(ctx.q_power(n)));
        }
    }
    return rep;
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"taylor",    "viskov",     "leibniz",
                                                   "perpartes", "commutator", "markowsky"};
    return names;
}

/// Runs one named suite; "all" callers iterate suite_names() themselves.
inline verify_report run_suite(const std::string& name, const std::vector<preset_instance>& ps,
                               int trials, std::uint64_t seed, int max_deg) {
    auto clock_start = std::chrono::steady_clock::now();
    verify_report rep;
    if (name == "taylor")
        rep = suite_taylor(ps, trials, seed, max_deg);
    else if (name == "viskov")
        rep = suite_viskov(ps, trials, seed, max_deg);
    else if (name == "leibniz")
        rep = suite_leibniz(ps, trials, seed, max_deg);
    else if (name == "perpartes")
        rep = suite_perpartes(ps, trials, seed, max_deg);
    else if (name == "commutator")
        rep = suite_commutator(ps, trials, seed, max_deg);
    else if (name == "markowsky")
        rep = suite_markowsky(ps, trials, seed, max_deg);
    else
        throw out_of_range("unknown suite '" + name + "'");
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - clock_start)
                         .count();
    return rep;
}

}  // namespace qumbral
