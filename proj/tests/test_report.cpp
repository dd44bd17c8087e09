#include <doctest.h>

#include "orbitlab/report.hpp"
#include "orbitlab/verify.hpp"
#include "support.hpp"

using namespace orbitlab;
using namespace testgen;

namespace {

const char* kIntersect =
    "task = intersect\nfield = GF(2)\nf = x^2 + x\ng = x^2 + t^2 + t\n"
    "alpha = t; beta = 0\ncapM = 16; capN = 16\n";

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("built-in suite passes") {
        VerifyOptions opts;
        const auto checks = verify_all(opts);
        REQUIRE(!checks.empty());
        for (const auto& c : checks) {
            INFO(c.name << ": " << c.detail);
            CHECK(c.status == CheckResult::Status::Pass);
        }
        opts.pmax = 2;
        std::size_t skipped = 0;
        for (const auto& c : verify_all(opts)) skipped += c.status == CheckResult::Status::Skipped;
        CHECK(skipped > 0);
    }

    TEST_CASE("mutated inputs fail with both sides reported") {
        const auto F = f2();
        const auto bad = check_shifted_square_orbit(parse_dynpoly("x^2 + t^2", F), 6);
        CHECK(bad.status == CheckResult::Status::Fail);
        CHECK(!bad.lhs.empty());
        CHECK(!bad.rhs.empty());
        CHECK(bad.lhs != bad.rhs);
        CHECK(check_sum_map_orbit(parse_dynpoly("x^2 + x + 1", F), 3).status == CheckResult::Status::Fail);
        CHECK(check_sum_map_orbit(quadratic_pair_f(), 3).status == CheckResult::Status::Pass);
    }

    TEST_CASE("example ids") {
        const VerifyOptions opts;
        for (const char* id : {"1.3", "2.1", "2.2", "2.3", "2.4", "2.5", "2.6", "2.8", "2.9"}) {
            INFO(id);
            const auto checks = verify_example(id, 0, 0, opts);
            CHECK(!checks.empty());
            for (const auto& c : checks) CHECK(c.status != CheckResult::Status::Fail);
        }
        CHECK_THROWS_AS(verify_example("9.9", 0, 0, opts), Error);
        CHECK_THROWS_AS(verify_example("2.8", 4, 3, opts), Error);
    }

    TEST_CASE("reports are deterministic and valid JSON") {
        const Report a = run_scenario_text(kIntersect, "a.scn");
        const Report b = run_scenario_text(kIntersect, "a.scn");
        CHECK(a.exit_code == kExitOk);
        CHECK(emit_report(a, Format::Json, false) == emit_report(b, Format::Json, false));
        const auto parsed = nlohmann::json::parse(emit_report(a, Format::Json, false));
        CHECK(parsed == a.body);
        CHECK(parsed["result"]["count"] == 5);
        CHECK_FALSE(parsed.contains("timing"));
        CHECK(nlohmann::json::parse(emit_report(a, Format::Json, true)).contains("timing"));
        const std::string text = emit_report(a, Format::Text, false);
        CHECK(text.find("caveat: ") != std::string::npos);
        CHECK(text.find("time:") == std::string::npos);
    }

    TEST_CASE("exit codes") {
        const std::string base(kIntersect);
        CHECK(run_scenario_text(base + "expect = (1,1),(2,2),(4,4),(8,8),(16,16)\n", "x").exit_code == kExitOk);
        CHECK(run_scenario_text(base + "expect = (1,1)\n", "x").exit_code == kExitVerificationFailed);
        CHECK(run_scenario_text("task = intersect\nfield = GF(2)\nf = x^2 + * x\n", "x").exit_code == kExitInvalid);
        CHECK(run_scenario_text("task = intersect\nfield = GF(2)\nf = x^2\n", "x").exit_code == kExitInvalid);
        const Report budget = run_scenario_text(
            "task = classify\nfield = GF(2)\nf = x^2 + x\ng = x^4 + t^2 + t\nalpha = t; beta = 0\n"
            "degree_budget = 8\n",
            "x");
        CHECK(budget.exit_code == kExitBudget);
        CHECK(budget.body["status"] == "budget-exhausted");
        const Report both = combine({run_scenario_text(base, "x"), budget});
        CHECK(both.exit_code == kExitBudget);
        CHECK(both.body["reports"].size() == 2);
    }

    TEST_CASE("verify-example scenario") {
        const Report r = run_scenario_text("task = verify-example\nfield = GF(3)\nexample = 2.8; p = 3; nmax = 4\n", "x");
        CHECK(r.exit_code == kExitOk);
        CHECK(r.body["result"]["verdict"] == "PASS");
    }
}
