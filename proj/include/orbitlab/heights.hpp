#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "orbitlab/dynpoly.hpp"
#include "orbitlab/numtheory.hpp"

namespace orbitlab {

/// h(f^N(gamma)) / d^N together with a proven error bound.
struct HeightEstimate {
    BigRational value;
    BigRational error_bound;
    std::uint64_t iterations = 0;
};

/// B with |h(f(gamma)) - d*h(gamma)| <= B for every gamma in K.
struct HeightGapConstant {
    BigInt bound;
};

HeightGapConstant height_gap_constant(const KDynPoly& f);

// Iterates until B / (d^N (d - 1)) <= target_error.
HeightEstimate canonical_height(const KDynPoly& f, const RatFunc& gamma, const BigRational& target_error);

// Unique rational with denominator <= D in [value - err, value + err], if any.
std::optional<BigRational> rationalize(const HeightEstimate& e, const BigInt& denominator_bound);

// Simplest fraction (least denominator, then least absolute numerator) in a closed interval.
BigRational simplest_in(const BigRational& lo, const BigRational& hi);

// Pairs (m, n), 0 <= m <= cap_m, 0 <= n <= cap_n, with |d^m u1 - e^n u2| < c, lexicographic.
std::vector<std::pair<std::uint64_t, std::uint64_t>> pruned_candidates(const BigRational& u1, const BigRational& u2,
                                                                       std::uint64_t d, std::uint64_t e,
                                                                       const BigRational& c, std::uint64_t cap_m,
                                                                       std::uint64_t cap_n);

// Sieve constant from the two height-gap bounds; at least 1 so that exact equality passes.
BigRational sieve_constant(const HeightGapConstant& bf, const HeightGapConstant& bg);

}  // namespace orbitlab
