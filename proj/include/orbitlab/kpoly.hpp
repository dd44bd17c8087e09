#pragma once

#include <string>
#include <vector>

#include "orbitlab/ratfunc.hpp"

namespace orbitlab {

// Dense univariate polynomial over K = F_q(t); used for extension moduli
// and for the shift equations of the additive-conjugacy search.
class KPoly {
public:
    explicit KPoly(FieldPtr field) : field_(std::move(field)) {}
    KPoly(FieldPtr field, std::vector<RatFunc> coeffs);

    static KPoly constant(const RatFunc& c);
    static KPoly variable(const FieldPtr& field);

    const FieldPtr& field() const noexcept { return field_; }
    const std::vector<RatFunc>& coeffs() const noexcept { return c_; }
    // -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const RatFunc& leading() const { return c_.back(); }
    RatFunc coeff(std::size_t i) const { return i < c_.size() ? c_[i] : RatFunc(field_); }

    KPoly operator+(const KPoly& o) const;
    KPoly operator-(const KPoly& o) const;
    KPoly operator*(const KPoly& o) const;
    KPoly scaled(const RatFunc& c) const;
    bool operator==(const KPoly& o) const { return c_ == o.c_; }

    void divmod(const KPoly& divisor, KPoly& quot, KPoly& rem) const;
    KPoly rem(const KPoly& divisor) const;
    KPoly monic() const;
    RatFunc eval(const RatFunc& at) const;

    std::string str(char var) const;

private:
    void trim();

    FieldPtr field_;
    std::vector<RatFunc> c_;
};

KPoly gcd(KPoly a, KPoly b);

// Extended Euclid: returns g = gcd(a, b) (monic) and s with s*a == g (mod b).
KPoly gcd_ext(const KPoly& a, const KPoly& b, KPoly& s);

}  // namespace orbitlab
