#include "orbitlab/ratfunc.hpp"

namespace orbitlab {

RatFunc::RatFunc(FFPoly num, FFPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) fail(ErrorKind::DivisionByZero, "rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = FFPoly::constant(num_.field(), 1);
        return;
    }
    if (!den_.is_constant()) {
        FFPoly g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_.exact_div(g);
            den_ = den_.exact_div(g);
        }
    }
    if (den_.leading() != 1) {
        FiniteField::Code li = num_.field()->inv(den_.leading());
        num_ = num_.scaled(li);
        den_ = den_.scaled(li);
    }
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    if (den_.is_one() && o.den_.is_one()) return RatFunc(num_ + o.num_);
    if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
    FFPoly g = gcd(den_, o.den_);
    FFPoly b1 = den_.exact_div(g), d1 = o.den_.exact_div(g);
    return RatFunc(num_ * d1 + o.num_ * b1, b1 * o.den_);
}

RatFunc RatFunc::operator-() const {
    RatFunc out(*this);
    out.num_ = -num_;
    return out;
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    if (den_.is_one() && o.den_.is_one()) return RatFunc(num_ * o.num_);
    if (is_zero() || o.is_zero()) return zero_like();
    // Cross-cancel so the product is already reduced.
    FFPoly g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
    RatFunc out(field());
    out.num_ = num_.exact_div(g1) * o.num_.exact_div(g2);
    out.den_ = den_.exact_div(g2) * o.den_.exact_div(g1);
    if (out.den_.leading() != 1) {
        FiniteField::Code li = field()->inv(out.den_.leading());
        out.num_ = out.num_.scaled(li);
        out.den_ = out.den_.scaled(li);
    }
    return out;
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero in K");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) fail(ErrorKind::DivisionByZero, "division by zero in K");
    return *this * o.inverse();
}

RatFunc RatFunc::scaled(FiniteField::Code c) const {
    if (c == 0) return zero_like();
    RatFunc out(*this);
    out.num_ = num_.scaled(c);
    return out;
}

RatFunc RatFunc::pow(const BigInt& e) const {
    if (e < 0) return inverse().pow(-e);
    RatFunc out(field());
    out.num_ = num_.pow(e);
    out.den_ = den_.pow(e);
    return out;
}

RatFunc RatFunc::frobenius(const BigInt& k) const {
    if (k == 0) return *this;
    RatFunc out(field());
    out.num_ = num_.frobenius(k);
    out.den_ = den_.frobenius(k);
    return out;
}

BigInt RatFunc::height() const {
    BigInt a = num_.degree(), b = den_.degree();
    return a > b ? a : b;
}

std::string RatFunc::str() const {
    std::string n = num_.str();
    if (den_.is_one()) return n;
    std::string d = den_.str();
    if (n.find(' ') != std::string::npos) n = "(" + n + ")";
    if (d.find(' ') != std::string::npos) d = "(" + d + ")";
    return n + "/" + d;
}

void RatFunc::append_key(std::string& out) const {
    num_.append_key(out);
    out += '/';
    den_.append_key(out);
}

std::string RatFunc::key() const {
    std::string out;
    append_key(out);
    return out;
}

}  // namespace orbitlab
