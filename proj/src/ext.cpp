#include "orbitlab/ext.hpp"

namespace orbitlab {

namespace {

// Reduce a coefficient vector modulo the monic modulus; result has length s.
std::vector<RatFunc> reduce(std::vector<RatFunc> c, const KPoly& m) {
    const std::size_t s = static_cast<std::size_t>(m.degree());
    const auto& mc = m.coeffs();
    for (std::size_t k = c.size(); k-- > s;) {
        if (c[k].is_zero()) continue;
        RatFunc lead = c[k];
        for (std::size_t i = 0; i < s; ++i)
            if (!mc[i].is_zero()) c[k - s + i] -= lead * mc[i];
    }
    c.resize(s, RatFunc(m.field()));
    return c;
}

}  // namespace

ExtPtr ExtRing::create(const KPoly& modulus, char generator) {
    if (modulus.degree() < 1) fail(ErrorKind::InvalidArgument, "extension modulus must have degree >= 1");
    std::shared_ptr<ExtRing> ring(new ExtRing(modulus.monic(), generator));
    // y^p by repeated multiplication by y (p is small relative to s in practice).
    ExtElem y = ExtElem::generator(ring);
    ExtElem acc = y.one_like();
    std::uint64_t p = ring->field()->characteristic();
    ExtElem base = y;
    std::uint64_t e = p;
    while (e) {
        if (e & 1U) acc = acc * base;
        e >>= 1U;
        if (e) base = base * base;
    }
    ring->y_to_p_ = acc.coeffs();
    return ring;
}

ExtElem::ExtElem(ExtPtr ring) : ring_(std::move(ring)), c_(ring_->degree(), RatFunc(ring_->field())) {}

ExtElem::ExtElem(ExtPtr ring, const RatFunc& base) : ExtElem(std::move(ring)) {
    if (!base.field()->same_as(*field())) fail(ErrorKind::RingMismatch, "base element from a different field");
    c_[0] = base;
}

ExtElem::ExtElem(ExtPtr ring, std::vector<RatFunc> coeffs) : ring_(std::move(ring)) {
    c_ = reduce(std::move(coeffs), ring_->modulus());
}

ExtElem ExtElem::generator(const ExtPtr& ring) {
    std::vector<RatFunc> c(2, RatFunc(ring->field()));
    c[1] = RatFunc::constant(ring->field(), 1);
    return ExtElem(ring, std::move(c));
}

bool ExtElem::is_zero() const noexcept {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

bool ExtElem::in_base() const noexcept {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

bool ExtElem::is_one() const noexcept { return in_base() && c_[0].is_one(); }

void ExtElem::check(const ExtElem& o) const {
    if (!ring_->same_as(*o.ring_)) fail(ErrorKind::RingMismatch, "elements of different extension rings");
}

ExtElem ExtElem::operator+(const ExtElem& o) const {
    check(o);
    ExtElem out(*this);
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] += o.c_[i];
    return out;
}

ExtElem ExtElem::operator-(const ExtElem& o) const {
    check(o);
    ExtElem out(*this);
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] -= o.c_[i];
    return out;
}

ExtElem ExtElem::operator-() const {
    ExtElem out(*this);
    for (auto& x : out.c_) x = -x;
    return out;
}

ExtElem ExtElem::operator*(const ExtElem& o) const {
    check(o);
    const std::size_t s = c_.size();
    if (in_base()) {
        ExtElem out(o);
        for (auto& x : out.c_) x = x * c_[0];
        return out;
    }
    if (o.in_base()) return o * *this;
    std::vector<RatFunc> prod(2 * s - 1, RatFunc(field()));
    for (std::size_t i = 0; i < s; ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < s; ++j)
            if (!o.c_[j].is_zero()) prod[i + j] += c_[i] * o.c_[j];
    }
    ExtElem out(ring_);
    out.c_ = reduce(std::move(prod), ring_->modulus());
    return out;
}

ExtElem ExtElem::inverse() const {
    if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero in extension ring");
    KPoly a(field(), c_), s(field());
    KPoly g = gcd_ext(a, ring_->modulus(), s);
    if (g.degree() != 0)
        fail(ErrorKind::ZeroDivisor, "element " + str() + " is a zero divisor modulo " + ring_->spec_string());
    return ExtElem(ring_, s.coeffs());
}

ExtElem ExtElem::operator/(const ExtElem& o) const {
    check(o);
    return *this * o.inverse();
}

ExtElem ExtElem::frobenius(const BigInt& k) const {
    ExtElem cur(*this);
    const std::size_t s = c_.size();
    ExtElem yp(ring_, ring_->gen_to_p());
    for (BigInt step = 0; step < k; ++step) {
        // (sum a_j y^j)^p = sum a_j^p (y^p)^j
        ExtElem acc(ring_), ypow = one_like();
        for (std::size_t j = 0; j < s; ++j) {
            if (!cur.c_[j].is_zero()) acc += ExtElem(ring_, cur.c_[j].frobenius(1)) * ypow;
            if (j + 1 < s) ypow = ypow * yp;
        }
        cur = std::move(acc);
    }
    return cur;
}

ExtElem ExtElem::pow(const BigInt& e) const {
    if (e < 0) return inverse().pow(-e);
    if (in_base()) return ExtElem(ring_, c_[0].pow(e));
    const std::uint64_t p = characteristic();
    auto digits = base_digits(e, p);
    ExtElem acc = one_like(), frob = *this;
    for (std::size_t j = 0; j < digits.size(); ++j) {
        if (j > 0) frob = frob.frobenius(1);
        if (digits[j]) acc = acc * small_pow(frob, digits[j], one_like());
    }
    return acc;
}

std::string ExtElem::str() const {
    std::string out;
    const char g = ring_->generator();
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string c = c_[i].str();
        if (i == 0) {
            out += c;
            continue;
        }
        bool compound = c.find(' ') != std::string::npos || c.find('/') != std::string::npos;
        if (!c_[i].is_one()) out += (compound ? "(" + c + ")" : c) + "*";
        out += g;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

void ExtElem::append_key(std::string& out) const {
    for (const auto& x : c_) {
        x.append_key(out);
        out += '|';
    }
}

std::string ExtElem::key() const {
    std::string out;
    append_key(out);
    return out;
}

}  // namespace orbitlab
