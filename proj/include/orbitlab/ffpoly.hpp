#pragma once

#include <string>
#include <vector>

#include "orbitlab/bigint.hpp"
#include "orbitlab/field.hpp"

namespace orbitlab {

/// Sparse polynomial in t over F_q with arbitrary-precision exponents.
///
/// Terms are kept sorted by strictly increasing exponent with nonzero
/// coefficients; the empty term list is the zero polynomial. Identities
/// such as t^(2^(2^k)) + t only exist in this form.
class FFPoly {
public:
    using Code = FiniteField::Code;
    struct Term {
        BigInt exp;
        Code coef;
        bool operator==(const Term& o) const { return coef == o.coef && exp == o.exp; }
    };

    explicit FFPoly(FieldPtr field) : field_(std::move(field)) {}
    static FFPoly constant(FieldPtr field, Code c);
    static FFPoly monomial(FieldPtr field, Code c, BigInt exp);
    static FFPoly variable(FieldPtr field) { return monomial(std::move(field), 1, 1); }
    // Sorts, merges equal exponents and drops zero coefficients.
    static FFPoly from_terms(FieldPtr field, std::vector<Term> terms);

    const FieldPtr& field() const noexcept { return field_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_one() const noexcept { return terms_.size() == 1 && terms_[0].exp == 0 && terms_[0].coef == 1; }
    bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == 0); }
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    // Degree of the zero polynomial is reported as 0.
    BigInt degree() const { return terms_.empty() ? BigInt(0) : terms_.back().exp; }
    BigInt low_degree() const { return terms_.empty() ? BigInt(0) : terms_.front().exp; }
    Code leading() const noexcept { return terms_.empty() ? 0 : terms_.back().coef; }
    Code constant_term() const noexcept { return !terms_.empty() && terms_[0].exp == 0 ? terms_[0].coef : 0; }
    Code coefficient(const BigInt& exp) const;

    FFPoly operator+(const FFPoly& o) const;
    FFPoly operator-(const FFPoly& o) const;
    FFPoly operator*(const FFPoly& o) const;
    FFPoly operator-() const;
    FFPoly scaled(Code c) const;
    FFPoly shifted(const BigInt& by) const;  // times t^by
    bool operator==(const FFPoly& o) const { return terms_ == o.terms_; }

    FFPoly frobenius(const BigInt& k) const;
    FFPoly pow(const BigInt& e) const;
    FFPoly monic() const;

    // Euclidean division; throws DivisionByZero for a zero divisor.
    void divmod(const FFPoly& divisor, FFPoly& quot, FFPoly& rem) const;
    FFPoly rem(const FFPoly& divisor) const;
    FFPoly exact_div(const FFPoly& divisor) const;

    Code eval(Code at) const;

    std::string str(char var = 't') const;
    void append_key(std::string& out) const;

private:
    void check(const FFPoly& o) const;

    FieldPtr field_;
    std::vector<Term> terms_;
};

FFPoly gcd(FFPoly a, FFPoly b);

}  // namespace orbitlab
