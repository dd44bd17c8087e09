#include <doctest.h>

#include "orbitlab/orbits.hpp"
#include "support.hpp"

using namespace orbitlab;
using namespace testgen;

namespace {

using P = std::pair<std::uint64_t, std::uint64_t>;
KDynPoly dp(const std::string& s, const FieldPtr& f) { return parse_dynpoly(s, f); }

}  // namespace

TEST_SUITE("orbits") {
    TEST_CASE("intersection examples") {
        auto F = f2();
        const KDynPoly f = dp("x^2 + x", F), g = dp("x^2 + t^2 + t", F);
        const auto rs = intersect_orbits(f, RatFunc::t(F), g, RatFunc(F), 64, 64);
        std::vector<P> expect;
        for (std::uint64_t k = 0; k <= 6; ++k) expect.push_back({1ULL << k, 1ULL << k});
        CHECK(rs.pairs == expect);
        CHECK(rs.exhaustive);

        const auto diag = intersect_orbits(f, RatFunc::t(F), f, RatFunc::t(F), 5, 5);
        CHECK(diag.pairs.size() == 6);

        const KDynPoly sq = dp("x^2", F);
        CHECK(intersect_orbits(sq, RatFunc(F), sq, RatFunc::constant(F, 1), 10, 10).pairs.empty());
        const auto same = intersect_orbits(sq, RatFunc::constant(F, 1), sq, RatFunc::constant(F, 1), 3, 4);
        CHECK(same.pairs.size() == 20);
    }

    TEST_CASE("synchronized collisions") {
        auto F = f2();
        const KDynPoly f = dp("x^2 + x", F), g = dp("x^2 + t^2 + t", F);
        const auto n = synchronized_collisions(f, RatFunc::t(F), g, RatFunc(F), 1, 1, 0, 0, 40);
        CHECK(n == std::vector<std::uint64_t>{1, 2, 4, 8, 16, 32});
        const auto all = synchronized_collisions(f, RatFunc::t(F), f, RatFunc::t(F), 2, 2, 1, 1, 5);
        CHECK(all.size() == 6);
    }

    TEST_CASE("reduction to equal degrees") {
        auto F = f2();
        CHECK_FALSE(reduce_to_same_degree(dp("x^2", F), RatFunc::t(F), dp("x^3", F), RatFunc::t(F), 5, 5));
        const auto r = reduce_to_same_degree(dp("x^4", F), RatFunc::t(F), dp("x^2", F), RatFunc::t(F), 6, 6);
        REQUIRE(r);
        CHECK(r->r == 1);
        CHECK(r->s == 2);
        CHECK(r->f1.degree() == r->g1.degree());
        const KDynPoly f = dp("x^2 + x", F), g = dp("x^2 + t^2 + t", F);
        const auto e = reduce_to_same_degree(f, RatFunc::t(F), g, RatFunc(F), 10, 10);
        REQUIRE(e);
        CHECK(e->a == 0);
        CHECK(e->b == 0);
        CHECK(*e->first_collision == P{1, 1});
    }

    TEST_CASE("curve return sets") {
        auto F = f2();
        const KDynPoly f = dp("x^2 + x", F), g = dp("x^2 + t^2 + t", F);
        const auto diag = curve_return_set(f, g, RatFunc::t(F), RatFunc(F), PlaneCurve::diagonal(F), 20);
        CHECK(diag == std::vector<std::uint64_t>{1, 2, 4, 8, 16});
        const PlaneCurve c = parse_curve("x2 - t^2 - t", F);
        CHECK(curve_return_set(f, g, RatFunc::t(F), RatFunc(F), c, 20) == std::vector<std::uint64_t>{1});
    }

    TEST_CASE("return models") {
        auto m = fit_return_model({1, 4, 13, 40}, 3, 40);
        REQUIRE(m.psets.size() == 1);
        CHECK(m.psets[0].a == BigRational(3, 2));
        CHECK(m.psets[0].b == BigRational(-1, 2));
        CHECK(m.finite.empty());
        CHECK(generate(m, 130) == std::vector<std::uint64_t>{1, 4, 13, 40, 121});

        auto ap = fit_return_model({3, 8, 13, 18, 23, 7}, 2, 25);
        REQUIRE(ap.progressions.size() == 1);
        CHECK(ap.progressions[0] == ArithProgression{5, 3});
        CHECK(ap.finite == std::vector<std::uint64_t>{7});
        CHECK(fit_return_model({}, 2, 10).components() == 0);
        const auto pw = fit_return_model({1, 2, 4, 8, 16, 32}, 2, 40);
        CHECK(generate(pw, 40) == std::vector<std::uint64_t>{1, 2, 4, 8, 16, 32});
    }

    TEST_CASE("progression verdicts") {
        auto F = f2();
        const KDynPoly f = dp("x^2 + x", F), g = dp("x^2 + t^2 + t", F);
        CHECK(ap_implies_common_iterate(f, f, 1, 0, RatFunc::t(F), RatFunc::t(F), 5) == ApVerdict::Confirmed);
        CHECK(ap_implies_common_iterate(f, g, 1, 1, RatFunc::t(F), RatFunc(F), 5) == ApVerdict::RefutedData);
        CHECK(ap_implies_common_iterate(dp("x^2", F), dp("x^3", F), 1, 0, RatFunc(F), RatFunc(F), 5) ==
              ApVerdict::RefutedIterate);
        CHECK_THROWS_AS(ap_implies_common_iterate(f, f, 0, 0, RatFunc(F), RatFunc(F), 5), Error);
    }

    TEST_CASE("preperiodic detection") {
        auto F = f2();
        const auto a = detect_preperiodic(dp("x^2", F), RatFunc::constant(F, 1), 10);
        REQUIRE(a);
        CHECK(a->preperiod == 0);
        CHECK(a->period == 1);
        CHECK_FALSE(detect_preperiodic(dp("x^2", F), RatFunc::t(F), 10));
        const auto b = detect_preperiodic(dp("x^2 + 1", f3()), RatFunc(f3()), 10);
        REQUIRE(b);
        CHECK(b->preperiod == 2);
        CHECK(b->period == 1);
    }
}
