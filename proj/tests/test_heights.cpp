#include <doctest.h>

#include "orbitlab/heights.hpp"
#include "orbitlab/numtheory.hpp"
#include "support.hpp"

using namespace orbitlab;
using namespace testgen;

namespace {

KDynPoly dp(const std::string& s, const FieldPtr& f) { return parse_dynpoly(s, f); }
RatFunc el(const std::string& s, const FieldPtr& f) { return parse_element(s, f); }
const BigRational kTarget(1, 64);

}  // namespace

TEST_SUITE("heights") {
    TEST_CASE("height gap constant") {
        auto F = f2();
        CHECK(height_gap_constant(dp("x^2", F)).bound == 0);
        CHECK(height_gap_constant(dp("x^2 + t^2 + t", F)).bound >= 2);
        CHECK(height_gap_constant(dp("x^3 + t*x", f3())).bound >= 1);
    }

    TEST_CASE("canonical height examples") {
        auto F = f2();
        const auto h1 = canonical_height(dp("x^2 + x", F), RatFunc::t(F), kTarget);
        CHECK(h1.value == 1);
        CHECK(h1.error_bound == 0);
        const auto h2 = canonical_height(dp("x^3", f3()), el("t^2", f3()), kTarget);
        CHECK(h2.value == 2);
        const auto h3 = canonical_height(dp("x^2", F), RatFunc::constant(F, 1), kTarget);
        CHECK(h3.value == 0);
        const auto h4 = canonical_height(dp("x^2 + t^2 + t", F), RatFunc(F), kTarget);
        CHECK(h4.error_bound <= kTarget);
        CHECK(abs(h4.value - 1) <= h4.error_bound);
        CHECK_THROWS_AS(canonical_height(dp("x + t", F), RatFunc(F), kTarget), Error);
    }

    TEST_CASE("functoriality on random samples") {
        for (const auto& F : {f2(), f3()}) {
            for (int i = 0; i < 20; ++i) {
                const KDynPoly f = dynpoly(F, 3, 1);
                if (f.degree() < 2) continue;
                const RatFunc g = ratfunc(F, 2);
                const auto a = canonical_height(f, g, kTarget);
                const auto b = canonical_height(f, f.evaluate(g), kTarget);
                const BigRational d(f.degree());
                CHECK(abs(b.value - d * a.value) <= b.error_bound + d * a.error_bound);
                CHECK(a.value >= -a.error_bound);
            }
        }
    }

    TEST_CASE("rationalization") {
        HeightEstimate e;
        e.value = BigRational(1) + BigRational(1, 64);
        e.error_bound = BigRational(1, 64);
        CHECK(*rationalize(e, 4) == 1);
        e.value = BigRational(1, 2);
        e.error_bound = BigRational(3, 10);
        CHECK_FALSE(rationalize(e, 4));
        e.value = BigRational(2, 3);
        e.error_bound = BigRational(1, 100);
        CHECK(*rationalize(e, 4) == BigRational(2, 3));
        CHECK(simplest_in(BigRational(3, 10), BigRational(2, 5)) == BigRational(1, 3));
        CHECK(simplest_in(BigRational(-5, 2), BigRational(-9, 4)) == BigRational(-5, 2));
    }

    TEST_CASE("pruned candidates") {
        const auto diag = pruned_candidates(1, 1, 2, 2, 1, 5, 5);
        REQUIRE(diag.size() == 6);
        for (std::uint64_t i = 0; i <= 5; ++i) CHECK(diag[i] == std::pair<std::uint64_t, std::uint64_t>{i, i});
        const auto half = pruned_candidates(1, 2, 4, 2, 1, 4, 8);
        for (auto [m, n] : half) CHECK(n + 1 == 2 * m);
        CHECK(half.size() == 4);
        CHECK(pruned_candidates(1, 1, 2, 3, BigRational(1, 2), 6, 6).size() == 1);
    }

    TEST_CASE("sieve constant and multiplicative dependence") {
        CHECK(sieve_constant({0}, {0}) >= 1);
        CHECK(sieve_constant({3}, {5}) >= 8);
        using P = std::pair<std::uint64_t, std::uint64_t>;
        CHECK(*multiplicative_dependence(4, 8) == P{3, 2});
        CHECK(*multiplicative_dependence(6, 6) == P{1, 1});
        CHECK(*multiplicative_dependence(9, 27) == P{3, 2});
        CHECK_FALSE(multiplicative_dependence(2, 3));
        CHECK_FALSE(multiplicative_dependence(12, 18));
        for (std::uint64_t d = 2; d <= 60; ++d)
            for (std::uint64_t e = 2; e <= 60; ++e) {
                auto dep = multiplicative_dependence(d, e);
                if (!dep) continue;
                CHECK(std::gcd(dep->first, dep->second) == 1);
                CHECK(big_pow(BigInt(d), dep->first) == big_pow(BigInt(e), dep->second));
            }
    }
}
