#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbitlab/ext.hpp"
#include "orbitlab/ratfunc.hpp"

namespace orbitlab {

/// Work limits for operations that expand iterates symbolically.
struct Budget {
    // Cap on terms(outer) * deg(result) for one composition.
    BigInt degree_budget = BigInt(1) << 20;
    // Cap on the tau-degree of twisted products and powers.
    std::uint64_t tau_budget = 4096;
};

/// Polynomial in the dynamical variable x over K (C = RatFunc) or over a
/// quotient ring K[y]/(M) (C = ExtElem). Sparse, exponents arbitrary precision.
template <class C>
class DynPoly {
public:
    struct Term {
        BigInt exp;
        C coef;
    };

    // The zero polynomial over the ring that `zero` belongs to.
    explicit DynPoly(C zero) : zero_(std::move(zero)) {}
    static DynPoly constant(const C& c);
    static DynPoly monomial(const C& c, BigInt exp);
    static DynPoly x(const C& any);
    static DynPoly from_terms(C zero, std::vector<Term> terms);

    const C& ring_zero() const noexcept { return zero_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    BigInt degree() const { return terms_.empty() ? BigInt(0) : terms_.back().exp; }
    C coefficient(const BigInt& exp) const;
    C leading() const { return terms_.empty() ? zero_ : terms_.back().coef; }

    DynPoly operator+(const DynPoly& o) const;
    DynPoly operator-(const DynPoly& o) const;
    DynPoly operator*(const DynPoly& o) const;
    DynPoly operator-() const;
    DynPoly scaled(const C& c) const;
    bool operator==(const DynPoly& o) const;
    bool operator!=(const DynPoly& o) const { return !(*this == o); }

    // Coefficients raised to p^k and exponents multiplied by p^k: the polynomial f^(p^k) as a power.
    DynPoly frobenius_power(const BigInt& k) const;
    // Polynomial power f(x)^e (not an iterate).
    DynPoly pow(const BigInt& e) const;

    C evaluate(const C& at) const;

    std::string str() const;
    std::string key() const;

private:
    C zero_;
    std::vector<Term> terms_;
};

using KDynPoly = DynPoly<RatFunc>;
using ExtDynPoly = DynPoly<ExtElem>;

/// mu(x) = scale * x + shift with scale a unit.
template <class C>
struct LinearMap {
    C scale;
    C shift;

    static LinearMap identity(const C& any) { return {any.one_like(), any.zero_like()}; }
    static LinearMap translation(const C& b) { return {b.one_like(), b}; }

    C apply(const C& x) const { return scale * x + shift; }
    LinearMap inverse() const;
    DynPoly<C> as_poly() const;
    std::string str() const;
};

// f o g; throws DegreeBudgetExceeded when terms(f) * deg(f o g) exceeds the budget.
template <class C>
DynPoly<C> compose(const DynPoly<C>& f, const DynPoly<C>& g, const Budget& budget = {});

// f^n as a polynomial; f^0 is x.
template <class C>
DynPoly<C> iterate(const DynPoly<C>& f, std::uint64_t n, const Budget& budget = {});

// f^n(gamma) by n successive evaluations.
template <class C>
C orbit_element(const DynPoly<C>& f, const C& gamma, std::uint64_t n);

// mu o f o mu^{-1}
template <class C>
DynPoly<C> conjugate(const DynPoly<C>& f, const LinearMap<C>& mu);

// Every exponent is a power of p: f(x + y) = f(x) + f(y).
template <class C>
bool is_additive(const DynPoly<C>& f);

ExtDynPoly lift(const KDynPoly& f, const ExtPtr& ring);
LinearMap<ExtElem> lift(const LinearMap<RatFunc>& mu, const ExtPtr& ring);

// ---- root finding and conjugacy to additive form ----

struct RootSearch {
    // Height bound for candidate roots in K.
    unsigned height_bound = 8;
    // Upper limit on candidate divisors enumerated per coefficient.
    std::size_t enumeration_cap = std::size_t{1} << 18;
};

/// A root of p in K found among bounded-height candidates u/v with u | p(0)
/// and v | lead(p) after clearing denominators.
std::optional<RatFunc> find_root_in_k(const KPoly& p, const RootSearch& search = {});

struct AdditiveConjugacy {
    explicit AdditiveConjugacy(KPoly equation) : shift_equation(std::move(equation)) {}
    enum class Outcome { Conjugate, NotConjugate };
    Outcome outcome = Outcome::NotConjugate;
    // gcd of the shift conditions, as a polynomial in the shift b.
    KPoly shift_equation;
    // Set when the shift lives in K.
    std::optional<LinearMap<RatFunc>> map_in_k;
    std::optional<KDynPoly> form_in_k;
    // Otherwise the shift is the class of y in K[y]/(shift_equation), which may not be a field.
    ExtPtr ring;
    std::optional<LinearMap<ExtElem>> map_in_ext;
    std::optional<ExtDynPoly> form_in_ext;
    bool witness_ring_may_not_be_field = false;
};

AdditiveConjugacy conjugate_to_additive(const KDynPoly& f, const Budget& budget = {},
                                        const RootSearch& search = {});

struct AffineShift {
    std::optional<RatFunc> in_k;
    ExtPtr ring;
    std::optional<ExtElem> in_ext;
    std::string str() const { return in_k ? in_k->str() : in_ext->str(); }
};

/// delta with f(delta) - delta = gamma for additive f, so that tau_{-delta} o f o tau_delta = f + gamma.
AffineShift solve_affine_conjugacy(const KDynPoly& f, const RatFunc& gamma, const Budget& budget = {},
                                   const RootSearch& search = {});

/// Least (m, n) in lexicographic order with f^m = g^n among m <= cap_m, n <= cap_n and deg f^m = deg g^n.
template <class C>
std::optional<std::pair<std::uint64_t, std::uint64_t>> common_iterate(const DynPoly<C>& f, const DynPoly<C>& g,
                                                                      std::uint64_t cap_m, std::uint64_t cap_n,
                                                                      const Budget& budget = {});

// Dense K[x] copy of a polynomial over K.
KPoly to_kpoly(const KDynPoly& f);

}  // namespace orbitlab
