// qumbral command-line front end: Bernoulli-Taylor expansions, single
// operator applications, and seeded identity-verification suites over the
// built-in calculus presets.
//
// Exit codes: 0 success, 1 verification failures, 2 usage or parse error,
// 3 math domain error. stdout carries results only; diagnostics go to stderr.

#include <CLI11.hpp>
#include <json.hpp>

#include <qumbral/qumbral.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::ordered_json;
using namespace qumbral;

namespace {

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<rational> parse_psi_table(const std::string& csv) {
    std::vector<rational> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t a = item.find_first_not_of(" \t");
        std::size_t b = item.find_last_not_of(" \t");
        if (a == std::string::npos) throw usage_error("empty entry in --psi table");
        out.push_back(rational::from_string(item.substr(a, b - a + 1)));
    }
    if (out.empty()) throw usage_error("--psi table is empty");
    return out;
}

q_context build_context(const std::string& preset, const std::string& q_str,
                        const std::string& psi_str, int cap) {
    if (preset == "classical") return presets::classical(cap);
    if (preset == "falling") return presets::forward_difference(cap);
    if (preset == "jackson") {
        if (q_str.empty()) throw usage_error("--preset jackson requires --q");
        return presets::jackson(rational::from_string(q_str), cap);
    }
    if (preset == "psi") {
        if (psi_str.empty()) throw usage_error("--preset psi requires --psi");
        std::vector<rational> table = parse_psi_table(psi_str);
        if (static_cast<int>(table.size()) < cap + 1)
            throw usage_error("--psi table has " + std::to_string(table.size()) +
                              " entries but cap " + std::to_string(cap) + " needs " +
                              std::to_string(cap + 1));
        return presets::psi_derivative(psi_sequence(std::move(table)), cap);
    }
    throw usage_error("unknown preset '" + preset + "'");
}

// verify preset tokens: classical | falling | jackson:<q>
std::vector<preset_instance> build_preset_list(const std::string& csv, int cap) {
    std::vector<preset_instance> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        if (tok == "classical")
            out.push_back({tok, presets::classical(cap)});
        else if (tok == "falling")
            out.push_back({tok, presets::forward_difference(cap)});
        else if (tok.rfind("jackson:", 0) == 0)
            out.push_back({tok, presets::jackson(rational::from_string(tok.substr(8)), cap)});
        else
            throw usage_error("unknown preset token '" + tok + "'");
    }
    if (out.empty()) throw usage_error("--presets selected nothing");
    return out;
}

ordered_json poly_json(const poly& f) {
    ordered_json arr = ordered_json::array();
    for (const std::string& s : poly_coeff_strings(f)) arr.push_back(s);
    return arr;
}

int cmd_expand(const std::string& preset, const std::string& q_str, const std::string& psi_str,
               const std::string& f_str, const std::string& y_str, int order, int cap_opt,
               const std::string& format) {
    poly f = parse_poly(f_str);
    rational y = rational::from_string(y_str);
    if (order < 0) throw usage_error("--order must be >= 0");
    int cap = cap_opt > 0 ? cap_opt : std::max(16, f.degree() + order + 2);
    q_context ctx = build_context(preset, q_str, psi_str, cap);
    taylor_expansion e = bernoulli_taylor(ctx, f, y, order);

    if (format == "json") {
        ordered_json j;
        j["y"] = y.to_string();
        j["order"] = e.order;
        ordered_json terms = ordered_json::array();
        for (const poly& t : e.terms) terms.push_back(poly_json(t));
        j["terms"] = terms;
        j["remainder"] = poly_json(e.remainder);
        j["ok"] = e.exact;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "preset: " << preset << "\n";
        if (!q_str.empty()) std::cout << "q: " << rational::from_string(q_str) << "\n";
        std::cout << "f: " << render_poly(f) << "\n";
        std::cout << "y: " << y << "\n";
        std::cout << "order: " << e.order << "\n";
        for (std::size_t k = 0; k < e.terms.size(); ++k)
            std::cout << "term[" << k << "]: " << render_poly(e.terms[k]) << "\n";
        std::cout << "sum(terms): " << render_poly(e.term_sum()) << "\n";
        std::cout << "remainder: " << render_poly(e.remainder) << "\n";
        std::cout << "reconstructed: " << render_poly(e.reconstructed) << "\n";
        std::cout << "ok: " << (e.exact ? "true" : "false") << "\n";
    }
    return e.exact ? 0 : 1;
}

int cmd_apply(const std::string& op, const std::string& preset, const std::string& q_str,
              const std::string& psi_str, const std::string& f_str, const std::string& y_str,
              int cap_opt, const std::string& format) {
    poly f = parse_poly(f_str);
    int cap = cap_opt > 0 ? cap_opt : std::max(16, f.degree() + 2);
    q_context ctx = build_context(preset, q_str, psi_str, cap);
    poly out;
    if (op == "Q")
        out = ctx.apply_q(f);
    else if (op == "xhat")
        out = ctx.apply_xhat(f);
    else if (op == "integrate")
        out = q_antiderivative(ctx, f);
    else if (op == "translate")
        out = ctx.translate(rational::from_string(y_str), f);
    else
        throw usage_error("unknown op '" + op + "' (expected Q, xhat, integrate, translate)");

    if (format == "json")
        std::cout << poly_json(out).dump() << "\n";
    else
        std::cout << render_poly(out) << "\n";
    return 0;
}

int cmd_verify(const std::string& suite, int trials, std::uint64_t seed, int max_deg,
               const std::string& presets_csv, int corrupt, int cap_opt,
               const std::string& format) {
    if (trials < 1) throw usage_error("--trials must be >= 1");
    if (max_deg < 0) throw usage_error("--max-deg must be >= 0");
    int cap = cap_opt > 0 ? cap_opt : std::max(16, 2 * max_deg + 4);
    std::vector<preset_instance> ps = build_preset_list(presets_csv, cap);
    if (corrupt >= 0) {
        int idx = corrupt < 1 ? 1 : (corrupt > cap ? cap : corrupt);
        for (preset_instance& p : ps) p.ctx.corrupt_n_psi_for_testing(idx);
        std::cerr << "note: corrupted n_psi entry " << idx << " in every preset\n";
    }

    std::vector<std::string> suites;
    if (suite == "all")
        suites = suite_names();
    else
        suites.push_back(suite);

    std::vector<verify_report> reports;
    for (const std::string& name : suites) {
        if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end())
            throw usage_error("unknown suite '" + name + "'");
        reports.push_back(run_suite(name, ps, trials, seed, max_deg));
    }

    bool ok = true;
    for (const verify_report& r : reports) ok = ok && r.ok();

    if (format == "json") {
        ordered_json j;
        ordered_json arr = ordered_json::array();
        for (const verify_report& r : reports) {
            ordered_json jr;
            jr["suite"] = r.suite;
            jr["trials"] = r.trials;
            jr["seed"] = r.seed;
            jr["checks"] = r.checks;
            ordered_json fails = ordered_json::array();
            for (const verify_failure& f : r.failures) {
                ordered_json jf;
                jf["preset"] = f.preset;
                jf["trial"] = f.trial;
                jf["input"] = f.input;
                jf["expected"] = f.expected;
                jf["actual"] = f.actual;
                fails.push_back(jf);
            }
            jr["failures"] = fails;
            arr.push_back(jr);
        }
        j["suites"] = arr;
        j["ok"] = ok;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const verify_report& r : reports) {
            std::cout << "suite " << r.suite << ": presets=" << ps.size()
                      << " trials=" << r.trials << " seed=" << r.seed << " checks=" << r.checks
                      << " failures=" << r.failures.size() << "\n";
            for (const verify_failure& f : r.failures) {
                std::cout << "counterexample (suite=" << r.suite << " preset=" << f.preset
                          << " trial=" << f.trial << "):\n";
                std::cout << "  input: " << f.input << "\n";
                std::cout << "  expected: " << f.expected << "\n";
                std::cout << "  actual: " << f.actual << "\n";
            }
        }
        std::cout << "result: " << (ok ? "PASS" : "FAIL") << "\n";
    }
    for (const verify_report& r : reports)
        std::cerr << "suite " << r.suite << " elapsed_ms=" << r.elapsed_ms << "\n";
    return ok ? 0 : 1;
}

int cmd_presets(const std::string& format) {
    struct row {
        const char* name;
        const char* params;
        const char* what;
    };
    const row rows[] = {
        {"classical", "", "Q = d/dx on the monomial basis"},
        {"jackson", "--q", "Q = Jackson derivative (f(x)-f(qx))/((1-q)x); q admissible rational"},
        {"psi", "--psi", "Q = psi-derivative for a custom admissible table (psi_0 = 1)"},
        {"falling", "", "Q = forward difference on the falling-factorial basis"},
    };
    if (format == "json") {
        ordered_json arr = ordered_json::array();
        for (const row& r : rows) {
            ordered_json j;
            j["name"] = r.name;
            j["params"] = r.params;
            j["description"] = r.what;
            arr.push_back(j);
        }
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const row& r : rows) {
            std::cout << r.name;
            if (r.params[0] != '\0') std::cout << " (requires " << r.params << ")";
            std::cout << ": " << r.what << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qumbral: exact Q-umbral calculus on polynomials"};
    app.require_subcommand(1);

    std::string preset = "classical", q_str, psi_str, f_str, y_str = "0", format = "text";
    std::string op, suite = "all", presets_csv =
        "classical,jackson:2,jackson:3/2,jackson:1/3,jackson:-2,falling";
    int order = 0, cap = 0, trials = 100, max_deg = 6, corrupt = -1;
    std::uint64_t seed = 42;

    auto add_ctx_opts = [&](CLI::App* c) {
        c->add_option("--preset", preset, "classical | jackson | psi | falling");
        c->add_option("--q", q_str, "Jackson parameter (rational, e.g. 2 or 3/2)");
        c->add_option("--psi", psi_str, "comma-separated psi table for --preset psi");
        c->add_option("--cap", cap, "degree cap (default: chosen from the input sizes)");
        c->add_option("--format", format, "text | json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* expand = app.add_subcommand("expand", "Bernoulli-Taylor expansion of f about y");
    add_ctx_opts(expand);
    expand->add_option("--f", f_str, "polynomial in x")->required();
    expand->add_option("--y", y_str, "expansion point (rational)");
    expand->add_option("--order", order, "expansion order n")->required();

    CLI::App* apply = app.add_subcommand("apply", "apply one operator to f");
    add_ctx_opts(apply);
    apply->add_option("--op", op, "Q | xhat | integrate | translate")->required();
    apply->add_option("--f", f_str, "polynomial in x")->required();
    apply->add_option("--y", y_str, "translation amount (rational)");

    CLI::App* verify = app.add_subcommand("verify", "seeded randomized identity suites");
    verify->add_option("--suite", suite,
                       "taylor | viskov | leibniz | perpartes | commutator | markowsky | all");
    verify->add_option("--trials", trials, "trials per preset (default 100)");
    verify->add_option("--seed", seed, "PRNG seed (default 42)");
    verify->add_option("--max-deg", max_deg, "max degree of sampled polynomials (default 6)");
    verify->add_option("--presets", presets_csv,
                       "comma list: classical | falling | jackson:<q>");
    verify->add_option("--cap", cap, "degree cap override");
    verify->add_option("--corrupt-psi", corrupt,
                       "test hook: corrupt cached n_psi entry N after context build");
    verify->add_option("--format", format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* presets_cmd = app.add_subcommand("presets", "list available presets");
    presets_cmd->add_option("--format", format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(expand))
            return cmd_expand(preset, q_str, psi_str, f_str, y_str, order, cap, format);
        if (app.got_subcommand(apply))
            return cmd_apply(op, preset, q_str, psi_str, f_str, y_str, cap, format);
        if (app.got_subcommand(verify))
            return cmd_verify(suite, trials, seed, max_deg, presets_csv, corrupt, cap, format);
        if (app.got_subcommand(presets_cmd)) return cmd_presets(format);
        std::cerr << "usage error: no subcommand\n";
        return 2;
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "math error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
