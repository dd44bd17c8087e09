#include <doctest.h>

#include "support.hpp"

using namespace orbitlab;
using namespace testgen;

namespace {

KDynPoly dp(const std::string& s, const FieldPtr& f) { return parse_dynpoly(s, f); }
RatFunc el(const std::string& s, const FieldPtr& f) { return parse_element(s, f); }

}  // namespace

TEST_SUITE("dynpoly") {
    TEST_CASE("evaluate") {
        auto F = f2();
        CHECK(dp("x^2 + x", F).evaluate(RatFunc::t(F)) == el("t^2 + t", F));
        CHECK(dp("x^3 + t*x", F).evaluate(RatFunc(F)).is_zero());
        CHECK(dp("x^2 + t^2 + t", F).evaluate(RatFunc(F)) == el("t^2 + t", F));
        const ExtPtr R = parse_ext_spec("y^2 + y + t", F);
        CHECK_THROWS_AS(lift(dp("x^2", F), R).evaluate(ExtElem(parse_ext_spec("y^3 + t", F))), Error);
    }

    TEST_CASE("compose") {
        auto F = f2();
        const KDynPoly f = dp("x^2 + x", F);
        CHECK(compose(f, KDynPoly::x(RatFunc(F))) == f);
        CHECK(compose(f, f) == dp("x^4 + x", F));
        CHECK(compose(dp("x^2", F), dp("x^3", F)) == dp("x^6", F));
        Budget tiny;
        tiny.degree_budget = 10;
        bool raised = false;
        try {
            compose(dp("x^4 + x", F), dp("x^4 + x", F), tiny);
        } catch (const Error& e) {
            raised = e.kind() == ErrorKind::DegreeBudgetExceeded;
        }
        CHECK(raised);
    }

    TEST_CASE("iterate and orbit elements") {
        auto F = f2();
        const KDynPoly f = dp("x^2 + x", F);
        CHECK(iterate(f, 3) == dp("x^8 + x^4 + x^2 + x", F));
        CHECK(iterate(f, 0) == KDynPoly::x(RatFunc(F)));
        // f^m = sum_i C(m, i) x^(2^i)
        for (std::uint64_t m = 1; m <= 9; ++m) {
            std::vector<KDynPoly::Term> terms;
            for (std::uint64_t i = 0; i <= m; ++i)
                if (binom_mod(m, i, 2)) terms.push_back({BigInt(1) << i, RatFunc::constant(F, 1)});
            CHECK(iterate(f, m) == KDynPoly::from_terms(RatFunc(F), terms));
        }
        const KDynPoly g = dp("x^2 + t^2 + t", F);
        for (std::uint64_t m = 1; m <= 12; ++m)
            CHECK(orbit_element(g, RatFunc(F), m) ==
                  RatFunc(FFPoly::from_terms(F, {{BigInt(1) << m, 1}, {1, 1}})));
    }

    TEST_CASE("orbit composition law and associativity on random samples") {
        for (const auto& F : {f2(), f3()}) {
            for (int i = 0; i < 25; ++i) {
                const KDynPoly f = dynpoly(F, 3, 1), g = dynpoly(F, 3, 1), h = dynpoly(F, 2, 1);
                CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
                const RatFunc gamma = ratfunc(F, 2);
                const std::uint64_t m = uniform(0, 3), n = uniform(0, 3);
                CHECK(orbit_element(f, gamma, m + n) == orbit_element(f, orbit_element(f, gamma, n), m));
                CHECK(iterate(f, 2).evaluate(gamma) == f.evaluate(f.evaluate(gamma)));
            }
        }
    }

    TEST_CASE("conjugation") {
        auto F = f2();
        const KDynPoly f = dp("x^2", F);
        const RatFunc t = RatFunc::t(F);
        // tau_{-delta} o f o tau_delta = f + gamma when f(delta) - delta = gamma
        const RatFunc delta = t;
        const RatFunc gamma = f.evaluate(delta) - delta;
        CHECK(conjugate(f, LinearMap<RatFunc>::translation(-delta)) == f + KDynPoly::constant(gamma));
        CHECK(conjugate(f, LinearMap<RatFunc>::identity(t)) == f);
        for (const auto& G : {f2(), f3()}) {
            for (int i = 0; i < 20; ++i) {
                const KDynPoly h = dynpoly(G, 3, 1);
                const LinearMap<RatFunc> mu{nonzero_ratfunc(G, 1), ratfunc(G, 1)};
                const auto n = uniform(1, 4);
                CHECK(iterate(conjugate(h, mu), n) == conjugate(iterate(h, n), mu));
                CHECK(conjugate(conjugate(h, mu), mu.inverse()) == h);
                const RatFunc x = ratfunc(G, 2);
                CHECK(conjugate(h, mu).evaluate(mu.apply(x)) == mu.apply(h.evaluate(x)));
            }
        }
    }

    TEST_CASE("linear orbits of the degree-one examples") {
        auto F = f3();
        const RatFunc t = RatFunc::t(F), one = t.one_like();
        const RatFunc eps = el("t^2", F) / (t - one);
        const KDynPoly g = conjugate(KDynPoly::monomial(one, 2), LinearMap<RatFunc>::translation(-eps));
        RatFunc b = t - eps;
        for (unsigned n = 0; n <= 6; ++n) {
            CHECK(b == RatFunc(FFPoly::monomial(F, 1, BigInt(1) << n)) - eps);
            b = g.evaluate(b);
        }
    }

    TEST_CASE("additivity") {
        for (std::uint64_t p : {2, 3, 5}) {
            const auto F = FiniteField::prime(p);
            std::string s = "x";
            for (std::uint64_t i = 1; i < p; ++i) s += " + x^" + big_pow(BigInt(p), i).str();
            CHECK(is_additive(dp(s, F)));
        }
        CHECK_FALSE(is_additive(dp("x^2 + t^2 + t", f2())));
        CHECK(is_additive(dp("w*x + x^4", f4())));
        const auto F = f3();
        const ExtPtr A = artin_schreier(F);
        for (int i = 0; i < 30; ++i) {
            const KDynPoly f = to_dynpoly(twisted(F, 2, 1));
            REQUIRE(is_additive(f));
            const RatFunc a = ratfunc(F, 2), b = ratfunc(F, 2);
            CHECK(f.evaluate(a + b) == f.evaluate(a) + f.evaluate(b));
            const ExtDynPoly fe = lift(f, A);
            const ExtElem u = ext_element(A, 1), v = ext_element(A, 1);
            CHECK(fe.evaluate(u + v) == fe.evaluate(u) + fe.evaluate(v));
        }
    }

    TEST_CASE("conjugate to additive: examples") {
        auto F = f2();
        const auto c1 = conjugate_to_additive(dp("x^2 + t^2 + t", F));
        REQUIRE(c1.outcome == AdditiveConjugacy::Outcome::Conjugate);
        REQUIRE(c1.map_in_k);
        CHECK(c1.shift_equation.str('b') == "b^2 + b + t^2 + t");
        CHECK(c1.form_in_k->str() == "x^2");
        CHECK(conjugate(dp("x^2 + t^2 + t", F), *c1.map_in_k) == *c1.form_in_k);

        const auto c2 = conjugate_to_additive(dp("x^4 + t*x", F));
        REQUIRE(c2.map_in_k);
        CHECK(c2.map_in_k->shift.is_zero());
        CHECK(*c2.form_in_k == dp("x^4 + t*x", F));

        const auto c3 = conjugate_to_additive(dp("x^2 + t", F));
        REQUIRE(c3.outcome == AdditiveConjugacy::Outcome::Conjugate);
        REQUIRE(c3.map_in_ext);
        CHECK(c3.ring->spec_string() == "y^2 + y + t");
        CHECK(c3.witness_ring_may_not_be_field);
        CHECK(c3.form_in_ext->str() == "x^2");
        CHECK(conjugate(lift(dp("x^2 + t", F), c3.ring), *c3.map_in_ext) == *c3.form_in_ext);

        const auto c4 = conjugate_to_additive(dp("x^3 + x^2", f3()));
        CHECK(c4.outcome == AdditiveConjugacy::Outcome::NotConjugate);
    }

    TEST_CASE("conjugate to additive: shifted additive maps with non-constant coefficients") {
        const auto F = f2();
        for (int i = 0; i < 40; ++i) {
            const KTwisted a = twisted(F, 3, 2);
            if (a.degree() < 1) continue;
            const KDynPoly additive = to_dynpoly(a);
            if (additive.degree() > 8) continue;
            const RatFunc b = ratfunc(F, 2);
            const KDynPoly f = conjugate(additive, LinearMap<RatFunc>::translation(b));
            const auto c = conjugate_to_additive(f);
            REQUIRE(c.outcome == AdditiveConjugacy::Outcome::Conjugate);
            if (c.map_in_k) {
                CHECK(is_additive(*c.form_in_k));
                CHECK(conjugate(f, *c.map_in_k) == *c.form_in_k);
            } else {
                CHECK(is_additive(*c.form_in_ext));
                CHECK(conjugate(lift(f, c.ring), *c.map_in_ext) == *c.form_in_ext);
            }
        }
    }

    TEST_CASE("common iterate") {
        auto F = f2();
        auto ci = common_iterate(dp("x^2", F), dp("x^4", F), 6, 6);
        REQUIRE(ci);
        CHECK(*ci == std::pair<std::uint64_t, std::uint64_t>{2, 1});
        CHECK_FALSE(common_iterate(dp("x^2 + x", F), dp("x^2 + t^2 + t", F), 6, 6));
        const KDynPoly f = dp("x^3 + t*x + 1", f3());
        CHECK(*common_iterate(f, f, 4, 4) == std::pair<std::uint64_t, std::uint64_t>{1, 1});
        CHECK_FALSE(common_iterate(dp("x^2", F), dp("x^3", F), 6, 6));
    }

    TEST_CASE("affine conjugacy") {
        auto F = f2();
        const KDynPoly f = dp("x^2", F);
        auto s1 = solve_affine_conjugacy(f, el("t^2 + t", F));
        REQUIRE(s1.in_k);
        CHECK(f.evaluate(*s1.in_k) - *s1.in_k == el("t^2 + t", F));
        auto s0 = solve_affine_conjugacy(f, RatFunc(F));
        REQUIRE(s0.in_k);
        CHECK(s0.in_k->is_zero());
        auto s2 = solve_affine_conjugacy(f, RatFunc::t(F));
        REQUIRE(s2.in_ext);
        CHECK(s2.ring->spec_string() == "y^2 + y + t");
        CHECK(s2.in_ext->str() == "y");
        CHECK_THROWS_AS(solve_affine_conjugacy(dp("x^2 + x + 1", F), RatFunc::t(F)), Error);
    }
}
