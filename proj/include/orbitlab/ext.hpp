#pragma once

#include <memory>
#include <string>
#include <vector>

#include "orbitlab/kpoly.hpp"

namespace orbitlab {

class ExtRing;
using ExtPtr = std::shared_ptr<const ExtRing>;

/// The quotient ring K[y]/(M(y)) for a monic M of degree s >= 1. M need not
/// be irreducible; inversion reports ZeroDivisor when it meets a common factor.
class ExtRing {
public:
    // A non-monic modulus is normalized by its leading coefficient.
    static ExtPtr create(const KPoly& modulus, char generator = 'y');

    const FieldPtr& field() const noexcept { return modulus_.field(); }
    const KPoly& modulus() const noexcept { return modulus_; }
    std::size_t degree() const noexcept { return static_cast<std::size_t>(modulus_.degree()); }
    char generator() const noexcept { return gen_; }
    // "ext = <modulus>" text for the modulus.
    std::string spec_string() const { return modulus_.str(gen_); }
    bool same_as(const ExtRing& o) const { return this == &o || modulus_ == o.modulus_; }

    // Reduced coefficients of y^p, cached at construction.
    const std::vector<RatFunc>& gen_to_p() const noexcept { return y_to_p_; }

private:
    ExtRing(KPoly modulus, char gen) : modulus_(std::move(modulus)), gen_(gen) {}

    KPoly modulus_;
    char gen_;
    std::vector<RatFunc> y_to_p_;
};

class ExtElem {
public:
    // zero of the ring
    explicit ExtElem(ExtPtr ring);
    // embeds a base-field element
    ExtElem(ExtPtr ring, const RatFunc& base);
    // coefficients over K, low to high; reduced modulo M
    ExtElem(ExtPtr ring, std::vector<RatFunc> coeffs);

    static ExtElem generator(const ExtPtr& ring);

    const ExtPtr& ring() const noexcept { return ring_; }
    const std::vector<RatFunc>& coeffs() const noexcept { return c_; }
    const FieldPtr& field() const noexcept { return ring_->field(); }
    std::uint64_t characteristic() const noexcept { return field()->characteristic(); }

    bool is_zero() const noexcept;
    bool is_one() const noexcept;
    // True when the element lies in K (only the y^0 coefficient is nonzero).
    bool in_base() const noexcept;
    bool in_prime_field() const noexcept { return in_base() && c_[0].in_prime_field(); }
    const RatFunc& base_part() const { return c_[0]; }

    ExtElem zero_like() const { return ExtElem(ring_); }
    ExtElem one_like() const { return ExtElem(ring_, RatFunc::constant(field(), 1)); }

    ExtElem operator+(const ExtElem& o) const;
    ExtElem operator-(const ExtElem& o) const;
    ExtElem operator*(const ExtElem& o) const;
    ExtElem operator/(const ExtElem& o) const;
    ExtElem operator-() const;
    ExtElem& operator+=(const ExtElem& o) { return *this = *this + o; }
    ExtElem& operator-=(const ExtElem& o) { return *this = *this - o; }
    ExtElem& operator*=(const ExtElem& o) { return *this = *this * o; }
    bool operator==(const ExtElem& o) const { return c_ == o.c_; }
    bool operator!=(const ExtElem& o) const { return !(*this == o); }

    // Throws ZeroDivisor when the element shares a factor with the modulus.
    ExtElem inverse() const;
    ExtElem pow(const BigInt& e) const;
    ExtElem frobenius(const BigInt& k) const;

    std::string str() const;
    std::string key() const;
    void append_key(std::string& out) const;

private:
    void check(const ExtElem& o) const;

    ExtPtr ring_;
    std::vector<RatFunc> c_;
};

}  // namespace orbitlab
