#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "orbitlab/bigint.hpp"
#include "orbitlab/errors.hpp"

namespace orbitlab {

class FiniteField;
using FieldPtr = std::shared_ptr<const FiniteField>;

/// The finite field F_q, q = p^r, presented as F_p[w]/(M(w)).
///
/// Elements are passed around as integer codes sum c_i p^i (c_i the
/// coefficient of w^i), which keeps sparse polynomials compact; FieldElem
/// is the self-describing wrapper for public use. Irreducibility of M is not
/// checked up front: inverting a nonzero element that shares a factor with M
/// raises ReducibleModulus.
class FiniteField {
public:
    using Code = std::uint64_t;

    static FieldPtr prime(std::uint64_t p);
    // modulus: coefficients low to high, monic, degree r >= 2.
    static FieldPtr extension(std::uint64_t p, std::vector<std::uint64_t> modulus, char generator = 'w');

    std::uint64_t characteristic() const noexcept { return p_; }
    unsigned degree() const noexcept { return r_; }
    std::uint64_t order() const noexcept { return q_; }
    char generator() const noexcept { return gen_; }
    const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }

    Code zero() const noexcept { return 0; }
    Code one() const noexcept { return 1; }
    Code gen_code() const;
    Code from_int(long long v) const;
    Code from_big(const BigInt& v) const;
    bool in_prime_field(Code a) const noexcept { return a < p_; }

    Code add(Code a, Code b) const;
    Code sub(Code a, Code b) const;
    Code neg(Code a) const;
    Code mul(Code a, Code b) const;
    Code inv(Code a) const;
    Code div(Code a, Code b) const { return mul(a, inv(b)); }
    Code pow(Code a, const BigInt& e) const;
    // a^(p^k)
    Code frobenius(Code a, const BigInt& k) const;

    std::vector<std::uint64_t> digits(Code a) const;
    Code encode(const std::vector<std::uint64_t>& digits) const;

    // Canonical text, e.g. "w^2 + 2*w + 1"; prime-field elements print as integers.
    std::string format(Code a) const;
    // "GF(p)" or "GF(q; mod=...)".
    std::string spec_string() const;

    bool same_as(const FiniteField& other) const noexcept;

private:
    FiniteField(std::uint64_t p, std::vector<std::uint64_t> modulus, char gen);

    Code mul_slow(Code a, Code b) const;
    Code inv_slow(Code a) const;
    Code frobenius_of_gen(const BigInt& k) const;

    std::uint64_t p_;
    unsigned r_;
    std::uint64_t q_;
    char gen_;
    std::vector<std::uint64_t> modulus_;
    std::vector<std::uint64_t> pow_p_;  // p^i for i < r

    // Dense tables for small extension fields.
    std::vector<std::uint32_t> add_table_;
    std::vector<std::uint32_t> mul_table_;
    std::vector<std::uint32_t> inv_table_;  // 0 marks non-invertible

    // Orbit of w under x -> x^p: w^(p^j) for j < frob_pre_ + frob_period_.
    std::vector<Code> gen_frob_;
    std::size_t frob_pre_ = 0;
    std::size_t frob_period_ = 0;
};

class FieldElem {
public:
    FieldElem(FieldPtr field, FiniteField::Code code) : field_(std::move(field)), code_(code) {}
    static FieldElem from_int(const FieldPtr& field, long long v) { return {field, field->from_int(v)}; }
    static FieldElem generator(const FieldPtr& field) { return {field, field->gen_code()}; }

    const FieldPtr& field() const noexcept { return field_; }
    FiniteField::Code code() const noexcept { return code_; }
    bool is_zero() const noexcept { return code_ == 0; }

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;
    FieldElem operator-() const { return {field_, field_->neg(code_)}; }
    bool operator==(const FieldElem& o) const noexcept { return code_ == o.code_ && field_->same_as(*o.field_); }

    FieldElem inverse() const { return {field_, field_->inv(code_)}; }
    FieldElem pow(const BigInt& e) const { return {field_, field_->pow(code_, e)}; }
    FieldElem frobenius(const BigInt& k) const { return {field_, field_->frobenius(code_, k)}; }
    std::vector<std::uint64_t> coefficients() const { return field_->digits(code_); }
    std::string str() const { return field_->format(code_); }

private:
    void check(const FieldElem& o) const;

    FieldPtr field_;
    FiniteField::Code code_;
};

// a^(p^k)
inline FieldElem frobenius(const FieldElem& a, const BigInt& k) { return a.frobenius(k); }

/// C(m, i) mod p by Lucas's theorem.
std::uint64_t binom_mod(const BigInt& m, const BigInt& i, std::uint64_t p);

bool is_prime(std::uint64_t n);

}  // namespace orbitlab
