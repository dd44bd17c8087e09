#include "orbitlab/ffpoly.hpp"

#include <algorithm>
#include <map>

namespace orbitlab {

namespace {

constexpr std::uint64_t kDenseSpan = std::uint64_t{1} << 22;
constexpr std::size_t kSmallDivisor = 256;

using Code = FiniteField::Code;
using Dense = std::vector<Code>;

void trim(Dense& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// (a * b) mod m over F_q; m monic of degree >= 1, a and b reduced.
Dense mulmod(const FiniteField& F, const Dense& a, const Dense& b, const Dense& m) {
    if (a.empty() || b.empty()) return {};
    Dense prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = F.add(prod[i + j], F.mul(a[i], b[j]));
    }
    std::size_t dm = m.size() - 1;
    for (std::size_t k = prod.size(); k-- > dm;) {
        Code c = prod[k];
        if (c == 0) continue;
        for (std::size_t i = 0; i <= dm; ++i) prod[k - dm + i] = F.sub(prod[k - dm + i], F.mul(c, m[i]));
    }
    if (prod.size() > dm) prod.resize(dm);
    trim(prod);
    return prod;
}

// t^e mod m
Dense powmod_t(const FiniteField& F, const BigInt& e, const Dense& m) {
    Dense result{1};
    if (m.size() == 2) {
        // m = t + c: t == -c
        Code root = F.neg(m[0]);
        Dense out{F.pow(root, e)};
        trim(out);
        return out;
    }
    Dense base{0, 1};
    unsigned bits = e == 0 ? 0 : static_cast<unsigned>(msb(e)) + 1;
    for (unsigned i = bits; i-- > 0;) {
        result = mulmod(F, result, result, m);
        if (bit_test(e, i)) {
            // multiply by t
            Dense shifted(result.size() + 1, 0);
            for (std::size_t j = 0; j < result.size(); ++j) shifted[j + 1] = result[j];
            result = mulmod(F, shifted, Dense{1}, m);
        }
    }
    trim(result);
    return result;
}

}  // namespace

FFPoly FFPoly::constant(FieldPtr field, Code c) {
    FFPoly out(std::move(field));
    if (c != 0) out.terms_.push_back({0, c});
    return out;
}

FFPoly FFPoly::monomial(FieldPtr field, Code c, BigInt exp) {
    FFPoly out(std::move(field));
    if (c != 0) out.terms_.push_back({std::move(exp), c});
    return out;
}

FFPoly FFPoly::from_terms(FieldPtr field, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
    FFPoly out(std::move(field));
    const FiniteField& F = *out.field_;
    for (auto& t : terms) {
        if (!out.terms_.empty() && out.terms_.back().exp == t.exp) {
            out.terms_.back().coef = F.add(out.terms_.back().coef, t.coef);
            if (out.terms_.back().coef == 0) out.terms_.pop_back();
        } else if (t.coef != 0) {
            out.terms_.push_back(std::move(t));
        }
    }
    return out;
}

void FFPoly::check(const FFPoly& o) const {
    if (!field_->same_as(*o.field_)) fail(ErrorKind::RingMismatch, "polynomials over different fields");
}

FFPoly::Code FFPoly::coefficient(const BigInt& exp) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp, [](const Term& t, const BigInt& e) { return t.exp < e; });
    return it != terms_.end() && it->exp == exp ? it->coef : 0;
}

FFPoly FFPoly::operator+(const FFPoly& o) const {
    check(o);
    const FiniteField& F = *field_;
    FFPoly out(field_);
    out.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && terms_[i].exp < o.terms_[j].exp)) {
            out.terms_.push_back(terms_[i++]);
        } else if (i == terms_.size() || o.terms_[j].exp < terms_[i].exp) {
            out.terms_.push_back(o.terms_[j++]);
        } else {
            Code c = F.add(terms_[i].coef, o.terms_[j].coef);
            if (c != 0) out.terms_.push_back({terms_[i].exp, c});
            ++i;
            ++j;
        }
    }
    return out;
}

FFPoly FFPoly::operator-() const {
    FFPoly out(*this);
    for (auto& t : out.terms_) t.coef = field_->neg(t.coef);
    return out;
}

FFPoly FFPoly::operator-(const FFPoly& o) const { return *this + (-o); }

FFPoly FFPoly::scaled(Code c) const {
    if (c == 0) return FFPoly(field_);
    FFPoly out(*this);
    for (auto& t : out.terms_) t.coef = field_->mul(t.coef, c);
    return out;
}

FFPoly FFPoly::shifted(const BigInt& by) const {
    FFPoly out(*this);
    for (auto& t : out.terms_) t.exp += by;
    return out;
}

FFPoly FFPoly::operator*(const FFPoly& o) const {
    check(o);
    if (is_zero() || o.is_zero()) return FFPoly(field_);
    const FiniteField& F = *field_;
    if (o.terms_.size() == 1) {
        FFPoly out(*this);
        for (auto& t : out.terms_) {
            t.exp += o.terms_[0].exp;
            t.coef = F.mul(t.coef, o.terms_[0].coef);
        }
        return out;
    }
    if (terms_.size() == 1) return o * *this;

    BigInt lo = terms_.front().exp + o.terms_.front().exp;
    BigInt span = terms_.back().exp + o.terms_.back().exp - lo;
    BigInt pairs = BigInt(terms_.size()) * o.terms_.size();
    if (span < kDenseSpan && span <= 16 * pairs) {
        std::size_t n = static_cast<std::size_t>(span) + 1;
        Dense acc(n, 0);
        std::vector<std::size_t> off_a(terms_.size()), off_b(o.terms_.size());
        for (std::size_t i = 0; i < terms_.size(); ++i)
            off_a[i] = static_cast<std::size_t>(terms_[i].exp - terms_.front().exp);
        for (std::size_t j = 0; j < o.terms_.size(); ++j)
            off_b[j] = static_cast<std::size_t>(o.terms_[j].exp - o.terms_.front().exp);
        for (std::size_t i = 0; i < terms_.size(); ++i)
            for (std::size_t j = 0; j < o.terms_.size(); ++j) {
                Code& slot = acc[off_a[i] + off_b[j]];
                slot = F.add(slot, F.mul(terms_[i].coef, o.terms_[j].coef));
            }
        FFPoly out(field_);
        for (std::size_t k = 0; k < n; ++k)
            if (acc[k] != 0) out.terms_.push_back({lo + k, acc[k]});
        return out;
    }

    std::vector<Term> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) prod.push_back({a.exp + b.exp, F.mul(a.coef, b.coef)});
    return from_terms(field_, std::move(prod));
}

FFPoly FFPoly::frobenius(const BigInt& k) const {
    if (k == 0) return *this;
    BigInt factor = big_pow(BigInt(field_->characteristic()), static_cast<std::uint64_t>(k));
    FFPoly out(*this);
    for (auto& t : out.terms_) {
        t.exp *= factor;
        t.coef = field_->frobenius(t.coef, k);
    }
    return out;
}

FFPoly FFPoly::pow(const BigInt& e) const {
    const std::uint64_t p = field_->characteristic();
    if (e == 0) return constant(field_, 1);
    if (terms_.size() == 1) {
        FFPoly out(*this);
        out.terms_[0].exp *= e;
        out.terms_[0].coef = field_->pow(out.terms_[0].coef, e);
        return out;
    }
    // a^e = prod_j (a^(p^j))^(e_j) over the base-p digits of e.
    auto digits = base_digits(e, p);
    FFPoly acc = constant(field_, 1);
    FFPoly frob = *this;
    for (std::size_t j = 0; j < digits.size(); ++j) {
        if (j > 0) frob = frob.frobenius(1);
        if (digits[j]) acc = acc * small_pow(frob, digits[j], constant(field_, 1));
    }
    return acc;
}

FFPoly FFPoly::monic() const {
    if (is_zero() || leading() == 1) return *this;
    return scaled(field_->inv(leading()));
}

constexpr std::size_t kMaxQuotientTerms = std::size_t{1} << 22;

void FFPoly::divmod(const FFPoly& divisor, FFPoly& quot, FFPoly& rem) const {
    check(divisor);
    if (divisor.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
    const FiniteField& F = *field_;
    const BigInt ddeg = divisor.degree();
    const Code lead_inv = F.inv(divisor.leading());
    std::map<BigInt, Code> r;
    for (const auto& t : terms_) r.emplace(t.exp, t.coef);
    std::vector<Term> q;
    while (!r.empty()) {
        auto top = std::prev(r.end());
        if (top->first < ddeg) break;
        if (q.size() >= kMaxQuotientTerms)
            fail(ErrorKind::DegreeBudgetExceeded, "polynomial division exceeds the quotient term limit");
        BigInt shift = top->first - ddeg;
        Code c = F.mul(top->second, lead_inv);
        q.push_back({shift, c});
        for (const auto& d : divisor.terms_) {
            BigInt e = d.exp + shift;
            Code sub = F.mul(c, d.coef);
            auto it = r.find(e);
            if (it == r.end()) {
                r.emplace(std::move(e), F.neg(sub));
            } else {
                it->second = F.sub(it->second, sub);
                if (it->second == 0) r.erase(it);
            }
        }
    }
    std::reverse(q.begin(), q.end());
    quot = FFPoly(field_);
    quot.terms_ = std::move(q);
    rem = FFPoly(field_);
    for (auto& [e, c] : r) rem.terms_.push_back({e, c});
}

FFPoly FFPoly::rem(const FFPoly& divisor) const {
    check(divisor);
    if (divisor.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
    if (divisor.is_constant()) return FFPoly(field_);
    const BigInt ddeg = divisor.degree();
    if (degree() < ddeg) return *this;
    if (divisor.is_monomial()) {
        FFPoly out(field_);
        for (const auto& t : terms_)
            if (t.exp < ddeg) out.terms_.push_back(t);
        return out;
    }
    if (ddeg <= kSmallDivisor && degree() > 2 * ddeg + 8) {
        // Reduce term by term with t^e mod m; avoids forming a dense quotient.
        const FiniteField& F = *field_;
        FFPoly m = divisor.monic();
        std::size_t dm = static_cast<std::size_t>(ddeg);
        Dense md(dm + 1, 0);
        for (const auto& t : m.terms_) md[static_cast<std::size_t>(t.exp)] = t.coef;
        Dense acc(dm, 0);
        for (const auto& t : terms_) {
            if (t.exp < ddeg) {
                std::size_t i = static_cast<std::size_t>(t.exp);
                acc[i] = F.add(acc[i], t.coef);
                continue;
            }
            Dense red = powmod_t(F, t.exp, md);
            for (std::size_t i = 0; i < red.size(); ++i) acc[i] = F.add(acc[i], F.mul(t.coef, red[i]));
        }
        FFPoly out(field_);
        for (std::size_t i = 0; i < dm; ++i)
            if (acc[i] != 0) out.terms_.push_back({i, acc[i]});
        return out;
    }
    FFPoly q(field_), r(field_);
    divmod(divisor, q, r);
    return r;
}

FFPoly FFPoly::exact_div(const FFPoly& divisor) const {
    if (divisor.is_one()) return *this;
    FFPoly q(field_), r(field_);
    divmod(divisor, q, r);
    if (!r.is_zero()) fail(ErrorKind::InvalidArgument, "inexact polynomial division");
    return q;
}

FFPoly::Code FFPoly::eval(Code at) const {
    const FiniteField& F = *field_;
    Code acc = 0;
    for (const auto& t : terms_) acc = F.add(acc, F.mul(t.coef, F.pow(at, t.exp)));
    return acc;
}

FFPoly gcd(FFPoly a, FFPoly b) {
    if (a.size() > 0 && b.size() > 0 && b.degree() > a.degree()) std::swap(a, b);
    if (b.is_monomial() || a.is_monomial()) {
        // gcd with c*t^k is t^min(k, ord_t(other))
        const FFPoly& mono = b.is_monomial() ? b : a;
        const FFPoly& other = b.is_monomial() ? a : b;
        if (other.is_zero()) return mono.monic();
        BigInt k = std::min(mono.low_degree(), other.low_degree());
        return FFPoly::monomial(a.field(), 1, k);
    }
    while (!b.is_zero()) {
        FFPoly r = a.rem(b);
        a = std::move(b);
        b = std::move(r);
        if (b.is_monomial()) return gcd(std::move(a), std::move(b));
    }
    return a.monic();
}

std::string FFPoly::str(char var) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t i = terms_.size(); i-- > 0;) {
        const Term& t = terms_[i];
        if (!out.empty()) out += " + ";
        std::string c = field_->format(t.coef);
        bool compound = c.find(' ') != std::string::npos;
        if (t.exp == 0) {
            out += c;
            continue;
        }
        if (t.coef != 1) out += (compound ? "(" + c + ")" : c) + "*";
        out += var;
        if (t.exp != 1) out += "^" + t.exp.str();
    }
    return out;
}

void FFPoly::append_key(std::string& out) const {
    for (const auto& t : terms_) {
        out += t.exp.str();
        out += ':';
        out += std::to_string(t.coef);
        out += ',';
    }
}

}  // namespace orbitlab
