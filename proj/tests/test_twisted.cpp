#include <doctest.h>

#include "support.hpp"

using namespace orbitlab;
using namespace testgen;

namespace {

KTwisted tw(const std::string& s, const FieldPtr& f) { return parse_twisted(s, f); }

}  // namespace

TEST_SUITE("twisted") {
    TEST_CASE("multiplication follows the twist rule") {
        const auto F = f2();
        const RatFunc c = parse_element("t + 1", F);
        const KTwisted tau = KTwisted::monomial(c.one_like(), 1);
        CHECK(twisted_mul(tau, KTwisted(RatFunc(F), {c})) == KTwisted::monomial(c.pow(2), 1));
        const KTwisted a = tw("1 + T", F);
        CHECK(twisted_mul(a, a) == tw("1 + T^2", F));
        CHECK(to_dynpoly(twisted_mul(a, a)) == parse_dynpoly("x^4 + x", F));
        CHECK(twisted_mul(a, KTwisted::identity(c)) == a);
    }

    TEST_CASE("powers") {
        const auto F4 = f4();
        const RatFunc lambda = RatFunc::constant(F4, F4->gen_code());
        const KTwisted A(RatFunc(F4), {lambda, RatFunc(F4), lambda.one_like()});
        // m = 3: lambda^3 + 3 lambda^2 T^2 + 3 lambda T^4 + T^6
        std::vector<RatFunc> expect(7, RatFunc(F4));
        for (unsigned i = 0; i <= 3; ++i) expect[2 * (3 - i)] += lambda.pow(i).scaled(binom_mod(3, i, 2));
        CHECK(twisted_pow(A, 3) == KTwisted(RatFunc(F4), expect));

        const auto F3 = f3();
        const KTwisted B = tw("1 + T + T^2", F3);
        CHECK(twisted_pow(B, 4) == tw("1 + T + T^2 + T^3 + T^4 + T^5 + T^6 + T^7 + T^8", F3));
        CHECK(twisted_pow(B, 0) == KTwisted::identity(RatFunc(F3)));
        Budget tiny;
        tiny.tau_budget = 10;
        bool raised = false;
        try {
            twisted_pow(B, 6, tiny);
        } catch (const Error& e) {
            raised = e.kind() == ErrorKind::TauDegreeBudgetExceeded;
        }
        CHECK(raised);
    }

    TEST_CASE("conversion to and from additive polynomials") {
        const auto F = f2();
        CHECK(from_dynpoly(parse_dynpoly("x^2 + x", F)) == tw("1 + T", F));
        CHECK(to_dynpoly(KTwisted::monomial(RatFunc::constant(F, 1), 3)) == parse_dynpoly("x^8", F));
        bool raised = false;
        try {
            from_dynpoly(parse_dynpoly("x^3 + x", F));
        } catch (const Error& e) {
            raised = e.kind() == ErrorKind::NotAdditive;
        }
        CHECK(raised);
        for (const auto& G : {f2(), f3(), f4()}) {
            for (int i = 0; i < 40; ++i) {
                const KTwisted a = twisted(G, 3, 2);
                CHECK(from_dynpoly(to_dynpoly(a)) == a);
            }
        }
    }

    TEST_CASE("commutation at an iterate") {
        const auto F4 = f4();
        const RatFunc one = RatFunc::constant(F4, 1);
        const RatFunc lambda = RatFunc::constant(F4, F4->gen_code());
        const KTwisted A = KTwisted::monomial(one, 1);
        const KTwisted B(RatFunc(F4), {lambda, RatFunc(F4), one});
        CHECK_FALSE(commute_at_iterate(A, B, 1));
        CHECK(commute_at_iterate(A, B, 2));
        for (int m = 1; m <= 4; ++m) CHECK(commute_at_iterate(B, B, m));
        const auto F5 = FiniteField::prime(5);
        const KTwisted C = tw("2 + 3*T + T^2", F5), D = tw("4 + T^3", F5);
        CHECK(C.over_prime_field());
        for (int m = 1; m <= 3; ++m) CHECK(commute_at_iterate(C, D, m));
    }

    TEST_CASE("evaluation") {
        const auto F4 = f4();
        const RatFunc t = RatFunc::t(F4);
        const RatFunc lambda = RatFunc::constant(F4, F4->gen_code());
        const KTwisted A(RatFunc(F4), {lambda, RatFunc(F4), t.one_like()});
        CHECK(twisted_eval(A, t) == lambda * t + t.pow(4));
        CHECK(twisted_eval(KTwisted::identity(t), t) == t);
        for (unsigned k = 0; k <= 1; ++k) {
            const BigInt n = big_pow(BigInt(2), 2 * k);
            const RatFunc v = twisted_eval(twisted_pow(A, n), t) - lambda * t;
            CHECK(v == RatFunc(FFPoly::monomial(F4, 1, big_pow(BigInt(2), static_cast<std::uint64_t>(2 * n)))));
        }
    }

    TEST_CASE("ring laws and representation homomorphism") {
        for (const auto& F : {f2(), f3(), f4()}) {
            for (int i = 0; i < 30; ++i) {
                const KTwisted a = twisted(F, 2, 1), b = twisted(F, 2, 1), c = twisted(F, 2, 1);
                CHECK(twisted_mul(twisted_mul(a, b), c) == twisted_mul(a, twisted_mul(b, c)));
                CHECK(twisted_mul(a, b + c) == twisted_mul(a, b) + twisted_mul(a, c));
                CHECK(twisted_mul(a + b, c) == twisted_mul(a, c) + twisted_mul(b, c));
                CHECK(to_dynpoly(twisted_mul(a, b)) == compose(to_dynpoly(a), to_dynpoly(b)));
                const auto m = uniform(0, 2), n = uniform(0, 2);
                CHECK(twisted_pow(a, m + n) == twisted_mul(twisted_pow(a, m), twisted_pow(a, n)));
                const RatFunc g = ratfunc(F, 2);
                CHECK(twisted_eval(a, g) == to_dynpoly(a).evaluate(g));
            }
        }
    }

    TEST_CASE("prime-field shortcut agrees with generic powering") {
        for (std::uint64_t p : {2, 3, 5}) {
            const auto F = FiniteField::prime(p);
            for (int i = 0; i < 10; ++i) {
                std::vector<RatFunc> c;
                const auto d = uniform(1, 3);
                for (std::uint64_t j = 0; j <= d; ++j) c.push_back(RatFunc::constant(F, uniform(j == d ? 1 : 0, p - 1)));
                const KTwisted a(RatFunc(F), c);
                const auto n = uniform(0, 40);
                KTwisted slow = KTwisted::identity(RatFunc(F));
                for (std::uint64_t j = 0; j < n; ++j) slow = twisted_mul(slow, a);
                CHECK(twisted_pow(a, n) == slow);
            }
        }
    }
}
