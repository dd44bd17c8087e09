#include "orbitlab/kpoly.hpp"

namespace orbitlab {

KPoly::KPoly(FieldPtr field, std::vector<RatFunc> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) { trim(); }

KPoly KPoly::constant(const RatFunc& c) { return KPoly(c.field(), {c}); }

KPoly KPoly::variable(const FieldPtr& field) {
    return KPoly(field, {RatFunc(field), RatFunc::constant(field, 1)});
}

void KPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

KPoly KPoly::operator+(const KPoly& o) const {
    std::vector<RatFunc> out(std::max(c_.size(), o.c_.size()), RatFunc(field_));
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
    return KPoly(field_, std::move(out));
}

KPoly KPoly::operator-(const KPoly& o) const {
    std::vector<RatFunc> out(std::max(c_.size(), o.c_.size()), RatFunc(field_));
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] -= o.c_[i];
    return KPoly(field_, std::move(out));
}

KPoly KPoly::operator*(const KPoly& o) const {
    if (c_.empty() || o.c_.empty()) return KPoly(field_);
    std::vector<RatFunc> out(c_.size() + o.c_.size() - 1, RatFunc(field_));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            if (!o.c_[j].is_zero()) out[i + j] += c_[i] * o.c_[j];
    }
    return KPoly(field_, std::move(out));
}

KPoly KPoly::scaled(const RatFunc& c) const {
    std::vector<RatFunc> out;
    out.reserve(c_.size());
    for (const auto& x : c_) out.push_back(x * c);
    return KPoly(field_, std::move(out));
}

void KPoly::divmod(const KPoly& divisor, KPoly& quot, KPoly& rem) const {
    if (divisor.is_zero()) fail(ErrorKind::DivisionByZero, "division by the zero polynomial over K");
    std::vector<RatFunc> r = c_;
    const std::size_t ds = divisor.c_.size();
    std::vector<RatFunc> q(r.size() >= ds ? r.size() - ds + 1 : 0, RatFunc(field_));
    RatFunc lead_inv = divisor.leading().inverse();
    while (r.size() >= ds) {
        std::size_t shift = r.size() - ds;
        RatFunc c = r.back() * lead_inv;
        q[shift] = c;
        if (!c.is_zero())
            for (std::size_t i = 0; i < ds; ++i)
                if (!divisor.c_[i].is_zero()) r[shift + i] -= c * divisor.c_[i];
        r.pop_back();
        while (!r.empty() && r.back().is_zero()) r.pop_back();
    }
    quot = KPoly(field_, std::move(q));
    rem = KPoly(field_, std::move(r));
}

KPoly KPoly::rem(const KPoly& divisor) const {
    KPoly q(field_), r(field_);
    divmod(divisor, q, r);
    return r;
}

KPoly KPoly::monic() const {
    if (c_.empty() || c_.back().is_one()) return *this;
    return scaled(c_.back().inverse());
}

RatFunc KPoly::eval(const RatFunc& at) const {
    RatFunc acc(field_);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * at + c_[i];
    return acc;
}

std::string KPoly::str(char var) const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string c = c_[i].str();
        bool compound = c.find(' ') != std::string::npos || c.find('/') != std::string::npos;
        if (i == 0) {
            out += c;
            continue;
        }
        if (!c_[i].is_one()) out += (compound ? "(" + c + ")" : c) + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

KPoly gcd(KPoly a, KPoly b) {
    while (!b.is_zero()) {
        KPoly r = a.rem(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

KPoly gcd_ext(const KPoly& a, const KPoly& b, KPoly& s) {
    KPoly r0 = a, r1 = b;
    KPoly s0 = KPoly::constant(RatFunc::constant(a.field(), 1)), s1(a.field());
    while (!r1.is_zero()) {
        KPoly q(a.field()), r(a.field());
        r0.divmod(r1, q, r);
        KPoly s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.is_zero()) {
        s = s0;
        return r0;
    }
    RatFunc li = r0.leading().inverse();
    s = s0.scaled(li);
    return r0.scaled(li);
}

}  // namespace orbitlab
