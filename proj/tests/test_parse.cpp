#include <doctest.h>

#include <functional>

#include "support.hpp"

using namespace orbitlab;
using namespace testgen;

namespace {

std::optional<ErrorKind> kind_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    return std::nullopt;
}

std::size_t position_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const SyntaxError& e) {
        return e.position();
    }
    return static_cast<std::size_t>(-1);
}

}  // namespace

TEST_SUITE("exprparse") {
    TEST_CASE("expressions and canonical printing") {
        auto F = f2();
        const ParseContext ctx{F, nullptr, {}};
        CHECK(print_canonical(parse_expr("(t + 1)^2", ctx)) == "t^2 + 1");
        CHECK(std::holds_alternative<FFPoly>(parse_expr("t^3 + t", ctx)));
        CHECK(std::holds_alternative<RatFunc>(parse_expr("1/t", ctx)));
        CHECK(std::holds_alternative<KDynPoly>(parse_expr("x^2 + t", ctx)));
        CHECK(std::holds_alternative<KTwisted>(parse_expr("T + t", ctx)));
        CHECK(parse_dynpoly("(x + 1)^2", F) == parse_dynpoly("x^2 + 1", F));
        CHECK(parse_dynpoly("x*x*x - x", f3()) == parse_dynpoly("x^3 + 2*x", f3()));
        CHECK(parse_element("t^18446744073709551615", F).height() == BigInt("18446744073709551615"));
        const auto F5 = FiniteField::prime(5);
        CHECK(parse_element("012", F5) == RatFunc::constant(F5, 2));
        CHECK(parse_element("t^010", F5).height() == 10);
        CHECK(parse_element("099", F5) == RatFunc::constant(F5, 4));
        const auto F4 = f4();
        CHECK(print_canonical(parse_expr("w*w", {F4, nullptr, {}})) == "w + 1");
        const ExtPtr R = parse_ext_spec("y^2 + y + t", F);
        CHECK(std::holds_alternative<ExtElem>(parse_expr("y^2", {F, R, {}})));
        CHECK(print_canonical(parse_expr("y^2", {F, R, {}})) == "y + t");
    }

    TEST_CASE("syntax errors carry positions") {
        auto F = f2();
        CHECK(position_of([&] { parse_dynpoly("x^2 + * x", F); }) == 6);
        CHECK(position_of([&] { parse_element("(t + 1", F); }) == 6);
        CHECK(position_of([&] { parse_element("t ^", F); }) == 3);
        CHECK(kind_of([&] { parse_element("t $ 1", F); }) == ErrorKind::SyntaxError);
        CHECK(kind_of([&] { parse_element("t + z", F); }) == ErrorKind::UndefinedSymbol);
        CHECK(kind_of([&] { parse_element("w", F); }) == ErrorKind::UndefinedSymbol);
        CHECK(kind_of([&] { parse_expr("x + T", {F, nullptr, {}}); }) == ErrorKind::MixedVariables);
        CHECK(kind_of([&] { parse_expr("y", {F, nullptr, {}}); }) == ErrorKind::UndefinedSymbol);
        CHECK(kind_of([&] { parse_dynpoly("x^(t)", F); }).has_value());
        CHECK_THROWS_AS(parse_element(std::string(400, '(') + "t" + std::string(400, ')'), F), Error);
    }

    TEST_CASE("round trips through canonical text") {
        for (const auto& F : {f2(), f3(), f4()}) {
            const ParseContext ctx{F, nullptr, {}};
            for (int i = 0; i < 200; ++i) {
                const RatFunc a = ratfunc(F, 4);
                CHECK(parse_element(print_canonical(a), F) == a);
                const KDynPoly f = dynpoly(F, 4, 2);
                CHECK(parse_dynpoly(f.str(), F) == f);
                const KTwisted tw = twisted(F, 3, 1);
                CHECK(parse_twisted(print_canonical(tw), F) == tw);
                const ParsedValue v = parse_expr(print_canonical(ParsedValue(f)), ctx);
                CHECK(print_canonical(v) == f.str());
            }
        }
    }

    TEST_CASE("scenario files") {
        const Scenario sc = parse_scenario(
            "# comment\n"
            "task = intersect\nfield = GF(2)\nf = x^2 + x\ng = x^2 + t^2 + t\n"
            "alpha = t; beta = 0\ncapM = 12; capN = 10\nprune = true\n");
        CHECK(sc.task == Task::Intersect);
        CHECK(sc.cap_m == 12);
        CHECK(sc.cap_n == 10);
        CHECK(sc.prune);
        REQUIRE(sc.f);
        CHECK(sc.f->str() == "x^2 + x");
        CHECK(sc.beta->is_zero());

        CHECK_THROWS_AS(parse_scenario("task = intersect\nfield = GF(2)\nf = x^2\nalpha = t\nbeta = t\n"),
                        ValidationError);
        CHECK_THROWS_AS(parse_scenario("task = nonsense\nfield = GF(2)\n"), ValidationError);
        CHECK_THROWS_AS(parse_scenario("task = intersect\nfield = GF(2)\nf = x^2\ng = x^2\nalpha = t\n"
                                       "beta = t\ncapM = -3\n"),
                        Error);
        try {
            parse_scenario("task = intersect\nfield = GF(2)\nf = x^2\nalpha = t\nbeta = t\n");
        } catch (const ValidationError& e) {
            CHECK(e.field() == "g");
        }
    }

    TEST_CASE("scenarios over an extension ring") {
        const Scenario sc = parse_scenario(
            "task = intersect\nfield = GF(3)\next = y^3 - y - t\n"
            "f = x^3 - x\ng = x^3\nalpha = y\nbeta = y\ncapM = 6; capN = 4\n");
        CHECK(sc.over_ext);
        REQUIRE(sc.f_ext);
        REQUIRE(sc.alpha_ext);
        CHECK(sc.alpha_ext->str() == "y");
    }
}
