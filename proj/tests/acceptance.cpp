// Acceptance suite: one pass/fail line per criterion, exit 0 only if all
// pass. Criteria 1-8 drive the library directly; 9 and 10 drive the CLI
// binary. Every tolerance here is exact rational equality.

#include <qumbral/qumbral.hpp>

#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "support/oracles.hpp"
#include "support/run_cli.hpp"

using namespace qumbral;

namespace {

int g_failures = 0;

void report(int number, const std::string& what, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << what;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    if (!pass) ++g_failures;
}

std::vector<preset_instance> acceptance_presets(int cap) { return default_preset_set(cap); }

// 1. Bernoulli-Taylor exactness: 200 seeded random (f, y, n) per preset,
//    deg f <= 10, 0 <= n <= 12, exact reconstruction, runtime < 10 s.
void criterion_1() {
    auto t0 = std::chrono::steady_clock::now();
    long bad = 0;
    auto ps = acceptance_presets(24);
    for (std::size_t pi = 0; pi < ps.size(); ++pi) {
        splitmix64 rng(1000 + pi);
        for (int t = 0; t < 200; ++t) {
            poly f = random_poly(rng, 10);
            rational y = random_rational(rng);
            int n = static_cast<int>(rng.below(13));
            taylor_expansion e = bernoulli_taylor(ps[pi].ctx, f, y, n);
            if (!e.exact || e.reconstructed != f) ++bad;
        }
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    report(1, "Bernoulli-Taylor exactness, 200 trials x 6 presets", bad == 0 && ms < 10000,
           std::to_string(bad) + " failures, " + std::to_string(ms) + " ms");
}

// 2. Viskov identity: residual exactly zero, 100 random (f, y, n <= 8) per preset.
void criterion_2() {
    long bad = 0;
    auto ps = acceptance_presets(20);
    for (std::size_t pi = 0; pi < ps.size(); ++pi) {
        splitmix64 rng(2000 + pi);
        for (int t = 0; t < 100; ++t) {
            poly f = random_poly(rng, 8);
            rational y = random_rational(rng);
            int n = static_cast<int>(rng.below(9));
            if (!viskov_residual(ps[pi].ctx, n, y, f).is_zero()) ++bad;
        }
    }
    report(2, "Viskov identity residual == 0", bad == 0, std::to_string(bad) + " failures");
}

// 3. Commutator [Q, xhat] q_n = q_n for all n <= 15, all presets.
void criterion_3() {
    long bad = 0;
    for (auto& p : acceptance_presets(16)) {
        for (int n = 0; n <= 15; ++n) {
            const poly& qn = p.ctx.basis().at(n);
            if (p.ctx.apply_q(p.ctx.apply_xhat(qn)) - p.ctx.apply_xhat(p.ctx.apply_q(qn)) != qn)
                ++bad;
        }
    }
    report(3, "commutator [Q, xhat] = id through n = 15", bad == 0,
           std::to_string(bad) + " failures");
}

// 4. Q-Leibnitz rule and the composition law, 100 random (f, g) per preset.
void criterion_4() {
    long bad = 0;
    auto ps = acceptance_presets(16);
    for (std::size_t pi = 0; pi < ps.size(); ++pi) {
        splitmix64 rng(4000 + pi);
        const q_context& ctx = ps[pi].ctx;
        for (int t = 0; t < 100; ++t) {
            poly f = random_poly(rng, 6), g = random_poly(rng, 6);
            poly lhs = ctx.apply_q(ctx.star_product(f, g));
            poly rhs = ctx.star_product(f.derivative(), g) + ctx.star_product(f, ctx.apply_q(g));
            if (lhs != rhs) ++bad;
            poly gt = ctx.star_product(g, poly(rational(1)));
            if (ctx.star_product(f, gt) != ctx.star_product(f, ctx.star_product(g, poly(rational(1)))))
                ++bad;
        }
    }
    report(4, "Q-Leibnitz rule and composition law", bad == 0, std::to_string(bad) + " failures");
}

// 5. Per partes, 100 random (f, g, a, b) per preset.
void criterion_5() {
    long bad = 0;
    auto ps = acceptance_presets(16);
    for (std::size_t pi = 0; pi < ps.size(); ++pi) {
        splitmix64 rng(5000 + pi);
        const q_context& ctx = ps[pi].ctx;
        for (int t = 0; t < 100; ++t) {
            poly f = random_poly(rng, 6), g = random_poly(rng, 6);
            rational a = random_rational(rng), b = random_rational(rng);
            poly fg = ctx.star_product(f, g);
            rational lhs = q_integral_definite(ctx, ctx.star_product(f, ctx.apply_q(g)), a, b);
            rational rhs = fg.eval(b) - fg.eval(a) -
                           q_integral_definite(ctx, ctx.star_product(f.derivative(), g), a, b);
            if (lhs != rhs) ++bad;
        }
    }
    report(5, "integration per partes", bad == 0, std::to_string(bad) + " failures");
}

// 6. Oracle equivalence: jackson vs difference quotient (200 per q), falling
//    vs shift, classical Taylor coefficients vs textbook for n >= deg f.
void criterion_6() {
    long bad = 0;
    std::uint64_t qi = 0;
    for (const rational& q : {rational(2), rational(3, 2), rational(1, 3), rational(-2)}) {
        q_context jk = presets::jackson(q, 12);
        splitmix64 rng(6000 + qi++);
        for (int t = 0; t < 200; ++t) {
            poly f = random_poly(rng, 10);
            if (jk.apply_q(f) != oracles::jackson_difference_quotient(f, q)) ++bad;
        }
    }
    {
        q_context fd = presets::forward_difference(12);
        splitmix64 rng(6100);
        for (int t = 0; t < 200; ++t) {
            poly f = random_poly(rng, 10);
            if (fd.apply_q(f) != oracles::forward_difference_shift(f)) ++bad;
        }
    }
    {
        q_context cl = presets::classical(16);
        splitmix64 rng(6200);
        for (int t = 0; t < 100; ++t) {
            poly f = random_poly(rng, 7);
            rational y = random_rational(rng);
            int n = f.degree() + static_cast<int>(rng.below(3));
            taylor_expansion e = bernoulli_taylor(cl, f, y, n);
            for (int k = 0; k <= n; ++k)
                if (e.terms[static_cast<std::size_t>(k)] != oracles::classical_taylor_term(f, y, k))
                    ++bad;
        }
    }
    report(6, "difference-quotient / shift / textbook-Taylor oracles", bad == 0,
           std::to_string(bad) + " failures");
}

// 7. Markowsky round trip at cap 12 for all presets.
void criterion_7() {
    long bad = 0;
    for (auto& p : acceptance_presets(12)) {
        basic_sequence rebuilt = basic_from_operator(p.ctx.q_on_monomials(), p.ctx.psi(), 12);
        for (int n = 0; n <= 12; ++n)
            if (rebuilt.at(n) != p.ctx.basis().at(n)) ++bad;
    }
    report(7, "Markowsky round trip at cap 12", bad == 0, std::to_string(bad) + " failures");
}

// 8. Noncommutativity witness at q = 2. The mixed-power closed form is
//    star(P_n, P_k) = (n!/n_psi!) P_{n+k}; the products differ by order.
//    (The paper's printed coefficient drops the (n+k)!/(n+k)_psi! factor:
//    with it, star(P_2, P_1) = (4/21)x^3 and star(P_1, P_2) = (2/7)x^3.)
void criterion_8() {
    q_context jk = presets::jackson(rational(2), 8);
    poly s21 = jk.star_product(jk.q_power(2), jk.q_power(1));
    poly s12 = jk.star_product(jk.q_power(1), jk.q_power(2));
    poly expect21 = jk.q_power(3).scaled(factorial(2) * jk.psi().factorial(2).reciprocal());
    poly expect12 = jk.q_power(3).scaled(factorial(1) * jk.psi().factorial(1).reciprocal());
    bool pass = s21 == expect21 && s12 == expect12 && s21 != s12 &&
                s21 == parse_poly("4*x^3/21") && s12 == parse_poly("2*x^3/7");
    report(8, "noncommutativity witness and mixed-power closed form", pass,
           "star(P2,P1) = " + render_poly(s21) + ", star(P1,P2) = " + render_poly(s12));
}

// 9. CLI worked example.
void criterion_9() {
    auto r = run_cli::run("expand --preset classical --f \"x^3\" --y 1 --order 1");
    bool pass = r.exit_code == 0 && run_cli::contains(r.out, "remainder: x^3 - 3*x + 2") &&
                run_cli::contains(r.out, "ok: true");
    report(9, "CLI worked example x^3 about 1 at order 1", pass,
           "exit " + std::to_string(r.exit_code));
}

// 10. CLI contract: determinism, exit codes 0/1/2/3, mutation counterexample.
void criterion_10() {
    std::string verify_args = "verify --suite all --trials 10 --seed 42 --max-deg 4";
    auto a = run_cli::run(verify_args);
    auto b = run_cli::run(verify_args);
    bool deterministic = a.out == b.out && a.exit_code == 0 && b.exit_code == 0;

    bool exit0 = a.exit_code == 0;
    auto usage = run_cli::run("verify --suite bogus");
    bool exit2 = usage.exit_code == 2;
    auto math = run_cli::run("expand --preset jackson --q=-1 --f \"x\" --y 0 --order 1");
    bool exit3 = math.exit_code == 3;
    auto corrupted = run_cli::run("verify --suite all --trials 10 --seed 42 --max-deg 4 --corrupt-psi 2");
    bool exit1 = corrupted.exit_code == 1 && run_cli::contains(corrupted.out, "counterexample");

    bool pass = deterministic && exit0 && exit1 && exit2 && exit3;
    report(10, "CLI determinism, exit codes, mutation counterexample", pass,
           std::string("deterministic=") + (deterministic ? "yes" : "no") + " codes=" +
               std::to_string(a.exit_code) + "/" + std::to_string(corrupted.exit_code) + "/" +
               std::to_string(usage.exit_code) + "/" + std::to_string(math.exit_code));
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    if (g_failures == 0)
        std::cout << "acceptance: all 10 criteria passed\n";
    else
        std::cout << "acceptance: " << g_failures << " criteria FAILED\n";
    return g_failures == 0 ? 0 : 1;
}
