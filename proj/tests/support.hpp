#pragma once

#include <random>

#include "orbitlab/parse.hpp"
#include "orbitlab/twisted.hpp"

namespace testgen {

using namespace orbitlab;

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x5eed5eedULL);
    return gen;
}

inline std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng());
}

inline FieldPtr f2() { return FiniteField::prime(2); }
inline FieldPtr f3() { return FiniteField::prime(3); }
inline FieldPtr f4() { return parse_field_spec("GF(4; mod=w^2+w+1)"); }
inline FieldPtr f9() { return parse_field_spec("GF(9; mod=w^2+1)"); }

inline FiniteField::Code element(const FieldPtr& field) { return uniform(0, field->order() - 1); }

inline FiniteField::Code nonzero(const FieldPtr& field) { return uniform(1, field->order() - 1); }

// Dense-ish polynomial of degree <= max_deg.
inline FFPoly poly(const FieldPtr& field, unsigned max_deg) {
    std::vector<FFPoly::Term> terms;
    for (unsigned i = 0; i <= max_deg; ++i)
        if (uniform(0, 2)) terms.push_back({BigInt(i), element(field)});
    return FFPoly::from_terms(field, std::move(terms));
}

// Sparse polynomial with exponents below 2^bits.
inline FFPoly sparse(const FieldPtr& field, unsigned max_terms, unsigned bits) {
    std::vector<FFPoly::Term> terms;
    const unsigned n = static_cast<unsigned>(uniform(0, max_terms));
    for (unsigned i = 0; i < n; ++i) {
        BigInt e = 0;
        for (unsigned b = 0; b < bits; b += 32) e = (e << 32) | BigInt(uniform(0, 0xffffffffULL));
        e &= (BigInt(1) << bits) - 1;
        terms.push_back({e, element(field)});
    }
    return FFPoly::from_terms(field, std::move(terms));
}

inline RatFunc ratfunc(const FieldPtr& field, unsigned max_deg) {
    FFPoly den = poly(field, max_deg);
    if (den.is_zero()) den = FFPoly::constant(field, 1);
    return RatFunc(poly(field, max_deg), den);
}

inline RatFunc nonzero_ratfunc(const FieldPtr& field, unsigned max_deg) {
    for (;;) {
        RatFunc r = ratfunc(field, max_deg);
        if (!r.is_zero()) return r;
    }
}

inline KDynPoly dynpoly(const FieldPtr& field, unsigned max_deg, unsigned coef_deg) {
    std::vector<KDynPoly::Term> terms;
    const unsigned d = static_cast<unsigned>(uniform(1, max_deg));
    for (unsigned i = 0; i < d; ++i)
        if (uniform(0, 1)) terms.push_back({BigInt(i), ratfunc(field, coef_deg)});
    terms.push_back({BigInt(d), nonzero_ratfunc(field, coef_deg)});
    return KDynPoly::from_terms(RatFunc(field), std::move(terms));
}

inline KTwisted twisted(const FieldPtr& field, unsigned max_tau, unsigned coef_deg) {
    const unsigned d = static_cast<unsigned>(uniform(0, max_tau));
    std::vector<RatFunc> c;
    for (unsigned i = 0; i < d; ++i) c.push_back(ratfunc(field, coef_deg));
    c.push_back(nonzero_ratfunc(field, coef_deg));
    return KTwisted(RatFunc(field), c);
}

inline ExtPtr artin_schreier(const FieldPtr& field) {
    const std::uint64_t p = field->characteristic();
    const RatFunc zero(field);
    std::vector<RatFunc> m(p + 1, zero);
    m[0] = -RatFunc::t(field);
    m[1] = -RatFunc::constant(field, 1);
    m[p] = RatFunc::constant(field, 1);
    return ExtRing::create(KPoly(field, m));
}

inline ExtElem ext_element(const ExtPtr& ring, unsigned coef_deg) {
    std::vector<RatFunc> c;
    for (std::size_t i = 0; i < ring->degree(); ++i) c.push_back(ratfunc(ring->field(), coef_deg));
    return ExtElem(ring, c);
}

}  // namespace testgen
