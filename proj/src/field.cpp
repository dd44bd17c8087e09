#include "orbitlab/field.hpp"

#include <unordered_map>

namespace orbitlab {

const char* error_kind_name(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::ReducibleModulus: return "ReducibleModulus";
        case ErrorKind::ZeroDivisor: return "ZeroDivisor";
        case ErrorKind::RingMismatch: return "RingMismatch";
        case ErrorKind::DegreeBudgetExceeded: return "DegreeBudgetExceeded";
        case ErrorKind::TauDegreeBudgetExceeded: return "TauDegreeBudgetExceeded";
        case ErrorKind::NotAdditive: return "NotAdditive";
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::UndefinedSymbol: return "UndefinedSymbol";
        case ErrorKind::MixedVariables: return "MixedVariables";
        case ErrorKind::ValidationError: return "ValidationError";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 32;
constexpr std::uint64_t kTableOrder = 256;
constexpr std::size_t kFrobeniusScan = 4096;

using Dense = std::vector<std::uint64_t>;

void trim(Dense& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod_p(std::uint64_t a, std::uint64_t p) {
    // p is prime and a != 0 mod p
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

// Remainder and quotient of dense polynomials over F_p.
void divmod_dense(Dense a, const Dense& b, std::uint64_t p, Dense& quot, Dense& rem) {
    trim(a);
    quot.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    std::uint64_t lead_inv = inv_mod_p(b.back(), p);
    while (a.size() >= b.size() && !a.empty()) {
        std::size_t shift = a.size() - b.size();
        std::uint64_t c = a.back() * lead_inv % p;
        quot[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] + p - c * b[i] % p) % p;
        trim(a);
    }
    rem = std::move(a);
}

Dense sub_mul(const Dense& a, const Dense& q, const Dense& b, std::uint64_t p) {
    // a - q*b
    Dense prod(q.empty() || b.empty() ? 0 : q.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + q[i] * b[j]) % p;
    Dense out(std::max(a.size(), prod.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::uint64_t x = i < a.size() ? a[i] : 0;
        std::uint64_t y = i < prod.size() ? prod[i] : 0;
        out[i] = (x + p - y) % p;
    }
    trim(out);
    return out;
}

}  // namespace

FieldPtr FiniteField::prime(std::uint64_t p) {
    if (!is_prime(p)) fail(ErrorKind::InvalidArgument, "characteristic " + std::to_string(p) + " is not prime");
    if (p >= kMaxOrder) fail(ErrorKind::InvalidArgument, "characteristic too large");
    return FieldPtr(new FiniteField(p, {}, 'w'));
}

FieldPtr FiniteField::extension(std::uint64_t p, std::vector<std::uint64_t> modulus, char generator) {
    if (!is_prime(p)) fail(ErrorKind::InvalidArgument, "characteristic " + std::to_string(p) + " is not prime");
    for (auto& c : modulus) c %= p;
    trim(modulus);
    if (modulus.size() < 2) fail(ErrorKind::InvalidArgument, "field modulus must have degree >= 1");
    if (modulus.back() != 1) fail(ErrorKind::InvalidArgument, "field modulus must be monic");
    if (modulus.size() == 2) return prime(p);
    return FieldPtr(new FiniteField(p, std::move(modulus), generator));
}

FiniteField::FiniteField(std::uint64_t p, std::vector<std::uint64_t> modulus, char gen)
    : p_(p), r_(modulus.empty() ? 1 : static_cast<unsigned>(modulus.size() - 1)), q_(1), gen_(gen),
      modulus_(std::move(modulus)) {
    for (unsigned i = 0; i < r_; ++i) {
        pow_p_.push_back(q_);
        if (q_ > kMaxOrder / p_) fail(ErrorKind::InvalidArgument, "field order exceeds 2^32");
        q_ *= p_;
    }
    if (r_ == 1) return;

    if (q_ <= kTableOrder) {
        add_table_.resize(q_ * q_);
        mul_table_.resize(q_ * q_);
        inv_table_.assign(q_, 0);
        for (Code a = 0; a < q_; ++a) {
            auto da = digits(a);
            for (Code b = 0; b < q_; ++b) {
                auto db = digits(b);
                Dense s(r_);
                for (unsigned i = 0; i < r_; ++i) s[i] = (da[i] + db[i]) % p_;
                add_table_[a * q_ + b] = static_cast<std::uint32_t>(encode(s));
                Code m = mul_slow(a, b);
                mul_table_[a * q_ + b] = static_cast<std::uint32_t>(m);
                if (m == 1) inv_table_[a] = static_cast<std::uint32_t>(b);
            }
        }
    }

    // w, w^p, w^(p^2), ... until the sequence revisits a value.
    std::unordered_map<Code, std::size_t> seen;
    Code cur = gen_code();
    for (std::size_t j = 0; j < kFrobeniusScan; ++j) {
        auto it = seen.find(cur);
        if (it != seen.end()) {
            frob_pre_ = it->second;
            frob_period_ = j - it->second;
            break;
        }
        seen.emplace(cur, j);
        gen_frob_.push_back(cur);
        cur = pow(cur, p_);
    }
}

FiniteField::Code FiniteField::gen_code() const {
    if (r_ == 1) fail(ErrorKind::InvalidArgument, "prime field has no generator symbol");
    return p_;  // digits (0, 1, 0, ...)
}

FiniteField::Code FiniteField::from_int(long long v) const {
    long long m = v % static_cast<long long>(p_);
    if (m < 0) m += static_cast<long long>(p_);
    return static_cast<Code>(m);
}

FiniteField::Code FiniteField::from_big(const BigInt& v) const {
    BigInt m = v % p_;
    if (m < 0) m += p_;
    return static_cast<Code>(m);
}

std::vector<std::uint64_t> FiniteField::digits(Code a) const {
    std::vector<std::uint64_t> out(r_);
    for (unsigned i = 0; i < r_; ++i) {
        out[i] = a % p_;
        a /= p_;
    }
    return out;
}

FiniteField::Code FiniteField::encode(const std::vector<std::uint64_t>& d) const {
    Code a = 0;
    for (std::size_t i = d.size(); i-- > 0;) {
        if (i >= r_) fail(ErrorKind::InvalidArgument, "digit vector longer than field degree");
        a = a * p_ + d[i] % p_;
    }
    return a;
}

FiniteField::Code FiniteField::add(Code a, Code b) const {
    if (r_ == 1) {
        Code s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    if (!add_table_.empty()) return add_table_[a * q_ + b];
    Code out = 0;
    for (unsigned i = r_; i-- > 0;) {
        Code da = a / pow_p_[i] % p_, db = b / pow_p_[i] % p_;
        out = out * p_ + (da + db) % p_;
    }
    return out;
}

FiniteField::Code FiniteField::neg(Code a) const {
    if (r_ == 1) return a == 0 ? 0 : p_ - a;
    Code out = 0;
    for (unsigned i = r_; i-- > 0;) {
        Code d = a / pow_p_[i] % p_;
        out = out * p_ + (d == 0 ? 0 : p_ - d);
    }
    return out;
}

FiniteField::Code FiniteField::sub(Code a, Code b) const { return add(a, neg(b)); }

FiniteField::Code FiniteField::mul(Code a, Code b) const {
    if (r_ == 1) return a * b % p_;
    if (!mul_table_.empty()) return mul_table_[a * q_ + b];
    return mul_slow(a, b);
}

FiniteField::Code FiniteField::mul_slow(Code a, Code b) const {
    auto da = digits(a), db = digits(b);
    Dense prod(2 * r_ - 1, 0);
    for (unsigned i = 0; i < r_; ++i)
        for (unsigned j = 0; j < r_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    for (std::size_t k = prod.size(); k-- > r_;) {
        std::uint64_t c = prod[k];
        if (c == 0) continue;
        for (unsigned i = 0; i <= r_; ++i) prod[k - r_ + i] = (prod[k - r_ + i] + p_ - c * modulus_[i] % p_) % p_;
    }
    prod.resize(r_);
    return encode(prod);
}

FiniteField::Code FiniteField::inv(Code a) const {
    if (a == 0) fail(ErrorKind::DivisionByZero, "division by zero in " + spec_string());
    if (r_ == 1) return inv_mod_p(a, p_);
    if (!inv_table_.empty()) {
        Code i = inv_table_[a];
        if (i == 0)
            fail(ErrorKind::ReducibleModulus,
                 "element " + format(a) + " is not invertible: modulus of " + spec_string() + " is reducible");
        return i;
    }
    return inv_slow(a);
}

FiniteField::Code FiniteField::inv_slow(Code a) const {
    // Extended Euclid in F_p[w]: track s with s*a == r (mod M).
    Dense r0 = modulus_, r1 = digits(a);
    trim(r1);
    Dense s0, s1{1};
    while (!r1.empty()) {
        Dense q, rem;
        divmod_dense(r0, r1, p_, q, rem);
        Dense s2 = sub_mul(s0, q, s1, p_);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.size() != 1)
        fail(ErrorKind::ReducibleModulus,
             "element " + format(a) + " is not invertible: modulus of " + spec_string() + " is reducible");
    std::uint64_t c = inv_mod_p(r0[0], p_);
    for (auto& x : s0) x = x * c % p_;
    s0.resize(r_, 0);
    return encode(s0);
}

FiniteField::Code FiniteField::pow(Code a, const BigInt& e) const {
    if (e < 0) return pow(inv(a), -e);
    Code acc = 1, base = a;
    BigInt n = e;
    while (n > 0) {
        if (bit_test(n, 0)) acc = mul(acc, base);
        n >>= 1;
        if (n > 0) base = mul(base, base);
    }
    return acc;
}

FiniteField::Code FiniteField::frobenius_of_gen(const BigInt& k) const {
    if (k < gen_frob_.size()) return gen_frob_[static_cast<std::size_t>(k)];
    if (frob_period_ > 0) {
        BigInt idx = frob_pre_ + (k - frob_pre_) % frob_period_;
        return gen_frob_[static_cast<std::size_t>(idx)];
    }
    BigInt steps = k - (gen_frob_.size() - 1);
    if (steps > 1'000'000) fail(ErrorKind::InvalidArgument, "Frobenius exponent too large for this modulus");
    Code cur = gen_frob_.back();
    for (BigInt s = 0; s < steps; ++s) cur = pow(cur, p_);
    return cur;
}

FiniteField::Code FiniteField::frobenius(Code a, const BigInt& k) const {
    if (r_ == 1 || a < p_ || k == 0) return a;
    // Frobenius fixes F_p, so a(w)^(p^k) = a(w^(p^k)).
    Code image = frobenius_of_gen(k);
    auto d = digits(a);
    Code acc = 0;
    for (std::size_t i = d.size(); i-- > 0;) acc = add(mul(acc, image), d[i]);
    return acc;
}

std::string FiniteField::format(Code a) const {
    if (r_ == 1) return std::to_string(a);
    auto d = digits(a);
    std::string out;
    for (std::size_t i = d.size(); i-- > 0;) {
        if (d[i] == 0) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += std::to_string(d[i]);
            continue;
        }
        if (d[i] != 1) out += std::to_string(d[i]) + "*";
        out += gen_;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

std::string FiniteField::spec_string() const {
    if (r_ == 1) return "GF(" + std::to_string(p_) + ")";
    std::string mod;
    for (std::size_t i = modulus_.size(); i-- > 0;) {
        std::uint64_t c = modulus_[i];
        if (c == 0) continue;
        if (!mod.empty()) mod += "+";
        if (i == 0) {
            mod += std::to_string(c);
            continue;
        }
        if (c != 1) mod += std::to_string(c) + "*";
        mod += gen_;
        if (i > 1) mod += "^" + std::to_string(i);
    }
    return "GF(" + std::to_string(q_) + "; mod=" + mod + ")";
}

bool FiniteField::same_as(const FiniteField& other) const noexcept {
    return this == &other || (p_ == other.p_ && modulus_ == other.modulus_);
}

void FieldElem::check(const FieldElem& o) const {
    if (!field_->same_as(*o.field_)) fail(ErrorKind::RingMismatch, "field elements from different fields");
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    check(o);
    return {field_, field_->add(code_, o.code_)};
}
FieldElem FieldElem::operator-(const FieldElem& o) const {
    check(o);
    return {field_, field_->sub(code_, o.code_)};
}
FieldElem FieldElem::operator*(const FieldElem& o) const {
    check(o);
    return {field_, field_->mul(code_, o.code_)};
}
FieldElem FieldElem::operator/(const FieldElem& o) const {
    check(o);
    return {field_, field_->div(code_, o.code_)};
}

std::uint64_t binom_mod(const BigInt& m, const BigInt& i, std::uint64_t p) {
    if (i < 0 || m < 0 || i > m) return 0;
    // Lucas: product of digit binomials, each computed mod p from small factorials.
    BigInt mm = m, ii = i;
    std::uint64_t acc = 1;
    while (ii > 0 || mm > 0) {
        std::uint64_t md = static_cast<std::uint64_t>(mm % p);
        std::uint64_t id = static_cast<std::uint64_t>(ii % p);
        if (id > md) return 0;
        std::uint64_t num = 1, den = 1;
        for (std::uint64_t k = 0; k < id; ++k) {
            num = num * ((md - k) % p) % p;
            den = den * ((k + 1) % p) % p;
        }
        acc = acc * num % p * inv_mod_p(den, p) % p;
        mm /= p;
        ii /= p;
    }
    return acc;
}

}  // namespace orbitlab
