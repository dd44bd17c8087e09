#pragma once

#include <string>
#include <vector>

#include "orbitlab/dynpoly.hpp"

namespace orbitlab {

/// Element sum c_i T^i of the twisted ring K{T} with T*c = c^p * T,
/// standing for the additive polynomial sum c_i x^(p^i).
template <class C>
class TwistedPoly {
public:
    explicit TwistedPoly(C zero) : zero_(std::move(zero)) {}
    TwistedPoly(C zero, std::vector<C> coeffs);

    static TwistedPoly identity(const C& any) { return TwistedPoly(any.zero_like(), {any.one_like()}); }
    static TwistedPoly monomial(const C& c, std::size_t i);

    const C& ring_zero() const noexcept { return zero_; }
    const std::vector<C>& coeffs() const noexcept { return c_; }
    // -1 for the zero element.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    C coeff(std::size_t i) const { return i < c_.size() ? c_[i] : zero_; }
    // All coefficients lie in F_p, where the ring is commutative.
    bool over_prime_field() const;

    TwistedPoly operator+(const TwistedPoly& o) const;
    TwistedPoly operator-(const TwistedPoly& o) const;
    bool operator==(const TwistedPoly& o) const { return c_ == o.c_; }
    bool operator!=(const TwistedPoly& o) const { return !(*this == o); }

    std::string str() const;
    std::string key() const;

private:
    void trim();

    C zero_;
    std::vector<C> c_;
};

using KTwisted = TwistedPoly<RatFunc>;
using ExtTwisted = TwistedPoly<ExtElem>;

// A*B, i.e. the composition A o B; throws TauDegreeBudgetExceeded.
template <class C>
TwistedPoly<C> twisted_mul(const TwistedPoly<C>& a, const TwistedPoly<C>& b, const Budget& budget = {});

template <class C>
TwistedPoly<C> twisted_pow(const TwistedPoly<C>& a, const BigInt& n, const Budget& budget = {});

template <class C>
DynPoly<C> to_dynpoly(const TwistedPoly<C>& a);

// Throws NotAdditive unless every exponent of f is a power of p.
template <class C>
TwistedPoly<C> from_dynpoly(const DynPoly<C>& f);

// A^m B^m == B^m A^m
template <class C>
bool commute_at_iterate(const TwistedPoly<C>& a, const TwistedPoly<C>& b, const BigInt& m, const Budget& budget = {});

// sum c_i gamma^(p^i) by iterated Frobenius.
template <class C>
C twisted_eval(const TwistedPoly<C>& a, const C& gamma);

}  // namespace orbitlab
