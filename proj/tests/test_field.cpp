#include <doctest.h>

#include "support.hpp"

using namespace orbitlab;
using namespace testgen;

TEST_SUITE("field-core") {
    TEST_CASE("arithmetic examples") {
        auto gf2 = f2();
        CHECK(gf2->add(1, 1) == 0);
        auto gf4 = f4();
        const auto w = gf4->gen_code();
        CHECK(gf4->format(gf4->mul(w, w)) == "w + 1");
        auto gf5 = FiniteField::prime(5);
        CHECK(gf5->div(2, 3) == 4);
    }

    TEST_CASE("division by zero and reducible modulus") {
        auto gf5 = FiniteField::prime(5);
        CHECK_THROWS_AS(gf5->inv(0), Error);
        try {
            gf5->inv(0);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::DivisionByZero);
        }
        // w^2 + 1 = (w + 1)^2 over F_2
        auto bad = FiniteField::extension(2, {1, 0, 1});
        bool raised = false;
        try {
            bad->inv(bad->add(1, bad->gen_code()));  // w + 1
        } catch (const Error& e) {
            raised = e.kind() == ErrorKind::ReducibleModulus;
        }
        CHECK(raised);
    }

    TEST_CASE("frobenius examples") {
        auto gf4 = f4();
        const auto w = gf4->gen_code();
        CHECK(gf4->frobenius(w, 1) == gf4->mul(w, w));
        CHECK(gf4->format(gf4->frobenius(w, 1)) == "w + 1");
        CHECK(gf4->frobenius(w, 0) == w);
        auto gf7 = FiniteField::prime(7);
        for (FiniteField::Code a = 0; a < 7; ++a) CHECK(gf7->frobenius(a, 5) == a);
        auto gf9 = f9();
        for (FiniteField::Code a = 0; a < 3; ++a) CHECK(gf9->frobenius(a, 1) == a);
    }

    TEST_CASE("frobenius is a ring homomorphism") {
        for (const auto& field : {f4(), f9(), parse_field_spec("GF(5^3)")}) {
            for (int i = 0; i < 200; ++i) {
                const auto a = element(field), b = element(field);
                const BigInt k = uniform(0, 6);
                CHECK(field->frobenius(field->add(a, b), k) ==
                      field->add(field->frobenius(a, k), field->frobenius(b, k)));
                CHECK(field->frobenius(field->mul(a, b), k) ==
                      field->mul(field->frobenius(a, k), field->frobenius(b, k)));
            }
        }
    }

    TEST_CASE("field axioms on random samples") {
        for (const auto& field : {FiniteField::prime(7), f4(), f9(), parse_field_spec("GF(2^5)")}) {
            for (int i = 0; i < 300; ++i) {
                const auto a = element(field), b = element(field), c = element(field);
                CHECK(field->add(field->add(a, b), c) == field->add(a, field->add(b, c)));
                CHECK(field->mul(field->mul(a, b), c) == field->mul(a, field->mul(b, c)));
                CHECK(field->mul(a, field->add(b, c)) == field->add(field->mul(a, b), field->mul(a, c)));
                CHECK(field->add(a, field->neg(a)) == 0);
                if (a != 0) CHECK(field->mul(a, field->inv(a)) == 1);
            }
        }
    }

    TEST_CASE("binomial coefficients mod p") {
        CHECK(binom_mod(4, 2, 2) == 0);
        for (std::uint64_t p : {2, 3, 5}) {
            for (unsigned k = 1; k <= 4; ++k) {
                const BigInt pk = big_pow(BigInt(p), k);
                for (BigInt i = 1; i < pk; ++i) CHECK(binom_mod(pk, i, p) == 0);
            }
            CHECK(binom_mod(BigInt(1) << 200, 0, p) == 1);
        }
        CHECK(binom_mod(3, 7, 5) == 0);
    }

    TEST_CASE("binomial coefficients agree with Pascal's triangle up to 2000") {
        for (std::uint64_t p : {2, 3, 5, 7}) {
            std::vector<std::uint64_t> row{1};
            for (std::uint64_t m = 0; m <= 2000; ++m) {
                if (m > 0) {
                    std::vector<std::uint64_t> next(m + 1, 1);
                    for (std::uint64_t j = 1; j < m; ++j) next[j] = (row[j - 1] + row[j]) % p;
                    row = std::move(next);
                }
                for (std::uint64_t i = 0; i <= m + 1; ++i) {
                    const std::uint64_t expect = i <= m ? row[i] : 0;
                    if (binom_mod(m, i, p) != expect) {
                        FAIL("mismatch at m=" << m << " i=" << i << " p=" << p);
                    }
                }
            }
        }
    }

    TEST_CASE("field specs") {
        CHECK(f4()->spec_string() == "GF(4; mod=w^2+w+1)");
        CHECK(parse_field_spec("GF(9)")->order() == 9);
        CHECK(parse_field_spec("GF(3^2)")->degree() == 2);
        CHECK_THROWS_AS(parse_field_spec("GF(6)"), Error);
        CHECK_THROWS_AS(parse_field_spec("GF(4; mod=w^2+1)"), Error);
    }
}
