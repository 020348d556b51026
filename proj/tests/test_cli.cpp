#include <doctest.h>

#include <json.hpp>

#include "support/run_cli.hpp"

using run_cli::contains;
using run_cli::run;

TEST_CASE("expand: classical worked example") {
    auto r = run("expand --preset classical --f \"x^3\" --y 1 --order 1");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "remainder: x^3 - 3*x + 2"));
    CHECK(contains(r.out, "sum(terms): 3*x - 2"));
    CHECK(contains(r.out, "ok: true"));
}

TEST_CASE("expand: json schema") {
    auto r = run("expand --preset classical --f \"x^3\" --y 1 --order 1 --format json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["y"] == "1");
    CHECK(j["order"] == 1);
    CHECK(j["terms"].size() == 2);
    CHECK(j["terms"][0] == nlohmann::json::array({"1"}));
    CHECK(j["remainder"] == nlohmann::json::array({"2", "-3", "0", "1"}));
    CHECK(j["ok"] == true);
}

TEST_CASE("expand: high order means zero remainder") {
    auto r = run("expand --preset jackson --q 2 --f \"x^2\" --y 0 --order 5");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "remainder: 0"));
    CHECK(contains(r.out, "ok: true"));
}

TEST_CASE("expand: inadmissible jackson parameter exits 3") {
    auto r = run("expand --preset jackson --q=-1 --f \"x^2\" --y 0 --order 1");
    CHECK(r.exit_code == 3);
}

TEST_CASE("apply examples") {
    auto q = run("apply --op Q --preset jackson --q 2 --f \"x^3\"");
    CHECK(q.exit_code == 0);
    CHECK(q.out == "7*x^2\n");

    auto integ = run("apply --op integrate --preset classical --f \"x^2\"");
    CHECK(integ.exit_code == 0);
    CHECK(integ.out == "x^3/3\n");

    auto tr = run("apply --op translate --preset classical --y 1 --f \"x^2\"");
    CHECK(tr.exit_code == 0);
    CHECK(tr.out == "x^2 + 2*x + 1\n");

    auto xh = run("apply --op xhat --preset jackson --q 2 --f \"x^2\" --format json");
    CHECK(xh.exit_code == 0);
    CHECK(nlohmann::json::parse(xh.out) == nlohmann::json::array({"0", "0", "0", "3/7"}));
}

TEST_CASE("usage and parse errors exit 2") {
    CHECK(run("apply --op bogus --f x").exit_code == 2);
    CHECK(run("expand --preset classical --f \"x^-1\" --y 0 --order 1").exit_code == 2);
    CHECK(run("verify --suite bogus --trials 1").exit_code == 2);
    CHECK(run("verify --trials 0").exit_code == 2);
    CHECK(run("bogus-subcommand").exit_code == 2);
    CHECK(run("expand --f x --order 1 --preset nosuch").exit_code == 2);
}

TEST_CASE("math domain errors exit 3") {
    // order pushed past an explicit cap
    CHECK(run("expand --preset classical --f \"x^2\" --y 0 --order 20 --cap 4").exit_code == 3);
    // degree pushed past an explicit cap
    CHECK(run("apply --op Q --preset classical --f \"x^9\" --cap 4").exit_code == 3);
    // inadmissible custom table
    CHECK(run("apply --op Q --preset psi --psi \"1,0,1\" --cap 2 --f \"x\"").exit_code == 3);
}

TEST_CASE("psi preset over the CLI") {
    auto r = run("apply --op Q --preset psi --psi \"1,1,1/3,1/21,1/315\" --cap 4 --f \"x^3\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "7*x^2\n");  // same table as jackson q=2
}

TEST_CASE("verify passes clean and is byte-identical across runs") {
    std::string args = "verify --suite taylor --trials 15 --seed 42 --max-deg 5";
    auto a = run(args);
    auto b = run(args);
    CHECK(a.exit_code == 0);
    CHECK(b.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(contains(a.out, "result: PASS"));
    CHECK(contains(a.out, "failures=0"));
}

TEST_CASE("verify all suites on a reduced budget") {
    auto r = run("verify --suite all --trials 5 --seed 7 --max-deg 4");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "suite taylor"));
    CHECK(contains(r.out, "suite markowsky"));
    CHECK(contains(r.out, "result: PASS"));
}

TEST_CASE("mutation: corrupted psi entry fails with a counterexample") {
    auto r = run("verify --suite all --trials 5 --seed 7 --max-deg 4 --corrupt-psi 2");
    CHECK(r.exit_code == 1);
    CHECK(contains(r.out, "counterexample"));
    CHECK(contains(r.out, "result: FAIL"));
}

TEST_CASE("verify json output") {
    auto r = run("verify --suite viskov --trials 5 --seed 3 --max-deg 4 --format json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["ok"] == true);
    CHECK(j["suites"][0]["suite"] == "viskov");
    CHECK(j["suites"][0]["failures"].empty());
}

TEST_CASE("presets listing") {
    auto r = run("presets");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "classical"));
    CHECK(contains(r.out, "jackson"));
    CHECK(contains(r.out, "falling"));
    auto j = run("presets --format json");
    CHECK(nlohmann::json::parse(j.out).size() == 4);
}
