#pragma once

#include <string>

#include "orbitlab/ffpoly.hpp"

namespace orbitlab {

/// An element of K = F_q(t) in canonical form: numerator and denominator
/// coprime, denominator monic. Equal elements have identical representations.
class RatFunc {
public:
    explicit RatFunc(FieldPtr field) : num_(field), den_(FFPoly::constant(field, 1)) {}
    explicit RatFunc(FFPoly num) : num_(std::move(num)), den_(FFPoly::constant(num_.field(), 1)) {}
    // Reduces to canonical form; throws DivisionByZero for a zero denominator.
    RatFunc(FFPoly num, FFPoly den);

    static RatFunc constant(const FieldPtr& field, FiniteField::Code c) { return RatFunc(FFPoly::constant(field, c)); }
    static RatFunc from_int(const FieldPtr& field, long long v) { return constant(field, field->from_int(v)); }
    static RatFunc t(const FieldPtr& field) { return RatFunc(FFPoly::variable(field)); }

    const FFPoly& num() const noexcept { return num_; }
    const FFPoly& den() const noexcept { return den_; }
    const FieldPtr& field() const noexcept { return num_.field(); }
    std::uint64_t characteristic() const noexcept { return field()->characteristic(); }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const noexcept { return den_.is_one(); }
    // True for elements of the constant field F_q.
    bool is_constant() const noexcept { return den_.is_one() && num_.is_constant(); }
    // True for elements of the prime field F_p.
    bool in_prime_field() const noexcept { return is_constant() && field()->in_prime_field(num_.constant_term()); }

    RatFunc zero_like() const { return RatFunc(field()); }
    RatFunc one_like() const { return constant(field(), 1); }

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc inverse() const;
    RatFunc scaled(FiniteField::Code c) const;
    RatFunc pow(const BigInt& e) const;
    // x -> x^(p^k), a ring endomorphism that preserves reduced form.
    RatFunc frobenius(const BigInt& k) const;

    /// Weil height on F_q(t): max(deg num, deg den).
    BigInt height() const;

    std::string str() const;
    // Injective serialization of the canonical form.
    std::string key() const;
    void append_key(std::string& out) const;

private:
    FFPoly num_;
    FFPoly den_;
};

inline BigInt weil_height(const RatFunc& x) { return x.height(); }

}  // namespace orbitlab
