#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbitlab/dynpoly.hpp"
#include "orbitlab/heights.hpp"

namespace orbitlab {

using IndexPair = std::pair<std::uint64_t, std::uint64_t>;

/// Collision pairs (m, n) with f^m(alpha) = g^n(beta), sorted and deduplicated.
struct ReturnSet {
    std::vector<IndexPair> pairs;
    std::uint64_t cap_m = 0;
    std::uint64_t cap_n = 0;
    // Every pair within the caps was decided.
    bool exhaustive = true;
    bool operator==(const ReturnSet& o) const = default;
};

struct ArithProgression {
    std::uint64_t a = 0;  // step
    std::uint64_t b = 0;  // first term
    bool operator==(const ArithProgression& o) const = default;
};

// {a q^k + b : k >= 0} with q = p^r
struct PSet {
    BigRational a;
    BigRational b;
    std::uint64_t p = 2;
    std::uint64_t r = 1;
    bool operator==(const PSet& o) const = default;
};

struct ReturnModel {
    std::vector<std::uint64_t> finite;
    std::vector<ArithProgression> progressions;
    std::vector<PSet> psets;
    std::size_t components() const { return finite.size() + progressions.size() + psets.size(); }
    bool operator==(const ReturnModel& o) const = default;
};

// Members of the model that are <= cap, sorted.
std::vector<std::uint64_t> generate(const ReturnModel& model, std::uint64_t cap);

/// Greedy fit: progressions with >= 4 witnesses first, then p-sets with >= 3,
/// remainder finite. `cap` is the bound up to which the data is exhaustive.
ReturnModel fit_return_model(std::vector<std::uint64_t> data, std::uint64_t p, std::uint64_t cap);

/// Sparse bivariate F(x1, x2) over K.
struct PlaneCurve {
    struct Term {
        BigInt e1;
        BigInt e2;
        RatFunc coef;
    };
    std::vector<Term> terms;

    static PlaneCurve diagonal(const FieldPtr& field);
    template <class C>
    C evaluate(const C& x1, const C& x2) const;
    std::string str() const;
};

// Sieve data for intersect_orbits.
struct Pruning {
    BigRational u1;
    BigRational u2;
    BigRational c;
};

template <class C>
ReturnSet intersect_orbits(const DynPoly<C>& f, const C& alpha, const DynPoly<C>& g, const C& beta,
                           std::uint64_t cap_m, std::uint64_t cap_n, const std::optional<Pruning>& pruning = {});

// n <= cap_n with f^(r n + a)(alpha) = g^(s n + b)(beta)
template <class C>
std::vector<std::uint64_t> synchronized_collisions(const DynPoly<C>& f, const C& alpha, const DynPoly<C>& g,
                                                   const C& beta, std::uint64_t r, std::uint64_t s, std::uint64_t a,
                                                   std::uint64_t b, std::uint64_t cap_n);

template <class C>
struct SameDegreeData {
    DynPoly<C> f1;
    DynPoly<C> g1;
    C alpha1;
    C beta1;
    std::uint64_t r = 1;
    std::uint64_t s = 1;
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    std::optional<IndexPair> first_collision;
};

template <class C>
std::optional<SameDegreeData<C>> reduce_to_same_degree(const DynPoly<C>& f, const C& alpha, const DynPoly<C>& g,
                                                        const C& beta, std::uint64_t cap_m, std::uint64_t cap_n,
                                                        const Budget& budget = {});

// n <= cap_n with F(f^n(x), g^n(y)) = 0 for the point (x, y)
template <class C>
std::vector<std::uint64_t> curve_return_set(const DynPoly<C>& f, const DynPoly<C>& g, const C& x, const C& y,
                                            const PlaneCurve& curve, std::uint64_t cap_n);

enum class ApVerdict { Confirmed, RefutedData, RefutedIterate };
const char* verdict_name(ApVerdict v);

template <class C>
ApVerdict ap_implies_common_iterate(const DynPoly<C>& f, const DynPoly<C>& g, std::uint64_t a, std::uint64_t b,
                                    const C& alpha, const C& beta, std::uint64_t cap_n, const Budget& budget = {});

struct Preperiodic {
    std::uint64_t preperiod = 0;
    std::uint64_t period = 0;
};

// Finite orbit found by key revisit within max_steps iterations, if any.
template <class C>
std::optional<Preperiodic> detect_preperiodic(const DynPoly<C>& f, const C& gamma, std::uint64_t max_steps);

}  // namespace orbitlab
