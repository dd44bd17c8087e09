#include "orbitlab/twisted.hpp"

namespace orbitlab {

namespace {

void check_tau(const BigInt& deg, const Budget& budget) {
    if (deg > budget.tau_budget)
        fail(ErrorKind::TauDegreeBudgetExceeded,
             "tau-degree " + deg.str() + " exceeds budget " + std::to_string(budget.tau_budget));
}

}  // namespace

template <class C>
TwistedPoly<C>::TwistedPoly(C zero, std::vector<C> coeffs) : zero_(std::move(zero)), c_(std::move(coeffs)) {
    trim();
}

template <class C>
TwistedPoly<C> TwistedPoly<C>::monomial(const C& c, std::size_t i) {
    std::vector<C> v(i + 1, c.zero_like());
    v[i] = c;
    return TwistedPoly(c.zero_like(), std::move(v));
}

template <class C>
void TwistedPoly<C>::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

template <class C>
bool TwistedPoly<C>::over_prime_field() const {
    for (const auto& c : c_)
        if (!c.in_prime_field()) return false;
    return true;
}

template <class C>
TwistedPoly<C> TwistedPoly<C>::operator+(const TwistedPoly& o) const {
    std::vector<C> out(std::max(c_.size(), o.c_.size()), zero_);
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
    return TwistedPoly(zero_, std::move(out));
}

template <class C>
TwistedPoly<C> TwistedPoly<C>::operator-(const TwistedPoly& o) const {
    std::vector<C> out(std::max(c_.size(), o.c_.size()), zero_);
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] -= o.c_[i];
    return TwistedPoly(zero_, std::move(out));
}

template <class C>
std::string TwistedPoly<C>::str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string c = c_[i].str();
        if (i == 0) {
            out += c;
            continue;
        }
        bool compound = c.find(' ') != std::string::npos || c.find('/') != std::string::npos;
        if (!c_[i].is_one()) out += (compound ? "(" + c + ")" : c) + "*";
        out += "T";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

template <class C>
std::string TwistedPoly<C>::key() const {
    std::string out;
    for (const auto& c : c_) {
        c.append_key(out);
        out += ';';
    }
    return out;
}

template <class C>
TwistedPoly<C> twisted_mul(const TwistedPoly<C>& a, const TwistedPoly<C>& b, const Budget& budget) {
    const C& zero = a.ring_zero();
    if (a.is_zero() || b.is_zero()) return TwistedPoly<C>(zero);
    check_tau(BigInt(a.degree() + b.degree()), budget);
    std::vector<C> out(static_cast<std::size_t>(a.degree() + b.degree()) + 1, zero);
    // b's coefficients raised to p^i, advanced one Frobenius step per row
    std::vector<C> bf = b.coeffs();
    const bool prime = b.over_prime_field();
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (i > 0 && !prime)
            for (auto& c : bf) c = c.frobenius(1);
        const C& ai = a.coeffs()[i];
        if (ai.is_zero()) continue;
        for (std::size_t j = 0; j < bf.size(); ++j)
            if (!bf[j].is_zero()) out[i + j] += ai * bf[j];
    }
    return TwistedPoly<C>(zero, std::move(out));
}

template <class C>
TwistedPoly<C> twisted_pow(const TwistedPoly<C>& a, const BigInt& n, const Budget& budget) {
    const C& zero = a.ring_zero();
    if (n < 0) fail(ErrorKind::InvalidArgument, "negative twisted power");
    if (n == 0) return TwistedPoly<C>::identity(zero);
    if (a.is_zero()) return a;
    check_tau(n * a.degree(), budget);
    if (a.over_prime_field()) {
        // Commutative case: A^n = prod_j A(T^(p^j))^(n_j).
        const std::uint64_t p = zero.characteristic();
        auto digits = base_digits(n, p);
        TwistedPoly<C> acc = TwistedPoly<C>::identity(zero);
        std::size_t stride = 1;
        for (std::size_t j = 0; j < digits.size(); ++j, stride *= p) {
            if (!digits[j]) continue;
            std::vector<C> spread(static_cast<std::size_t>(a.degree()) * stride + 1, zero);
            for (std::size_t i = 0; i < a.coeffs().size(); ++i) spread[i * stride] = a.coeffs()[i];
            TwistedPoly<C> sub(zero, std::move(spread));
            for (std::uint64_t r = 0; r < digits[j]; ++r) acc = twisted_mul(acc, sub, budget);
        }
        return acc;
    }
    TwistedPoly<C> acc = TwistedPoly<C>::identity(zero), base = a;
    BigInt e = n;
    while (e > 0) {
        if (e & 1) acc = twisted_mul(acc, base, budget);
        e >>= 1;
        if (e > 0) base = twisted_mul(base, base, budget);
    }
    return acc;
}

template <class C>
DynPoly<C> to_dynpoly(const TwistedPoly<C>& a) {
    using T = typename DynPoly<C>::Term;
    std::vector<T> terms;
    const std::uint64_t p = a.ring_zero().characteristic();
    BigInt e = 1;
    for (const auto& c : a.coeffs()) {
        if (!c.is_zero()) terms.push_back({e, c});
        e *= p;
    }
    return DynPoly<C>::from_terms(a.ring_zero(), std::move(terms));
}

template <class C>
TwistedPoly<C> from_dynpoly(const DynPoly<C>& f) {
    const C& zero = f.ring_zero();
    const std::uint64_t p = zero.characteristic();
    std::vector<C> out;
    for (const auto& t : f.terms()) {
        long long k = exact_log(t.exp, p);
        if (k < 0) fail(ErrorKind::NotAdditive, "exponent " + t.exp.str() + " is not a power of p");
        if (k > (1LL << 24)) fail(ErrorKind::TauDegreeBudgetExceeded, "tau-degree too large");
        if (out.size() <= static_cast<std::size_t>(k)) out.resize(static_cast<std::size_t>(k) + 1, zero);
        out[static_cast<std::size_t>(k)] = t.coef;
    }
    return TwistedPoly<C>(zero, std::move(out));
}

template <class C>
bool commute_at_iterate(const TwistedPoly<C>& a, const TwistedPoly<C>& b, const BigInt& m, const Budget& budget) {
    TwistedPoly<C> am = twisted_pow(a, m, budget), bm = twisted_pow(b, m, budget);
    return twisted_mul(am, bm, budget) == twisted_mul(bm, am, budget);
}

template <class C>
C twisted_eval(const TwistedPoly<C>& a, const C& gamma) {
    C acc = a.ring_zero(), g = gamma;
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (i > 0) g = g.frobenius(1);
        if (!a.coeffs()[i].is_zero()) acc += a.coeffs()[i] * g;
    }
    return acc;
}

#define ORBITLAB_INSTANTIATE(C)                                                                          \
    template class TwistedPoly<C>;                                                                       \
    template TwistedPoly<C> twisted_mul(const TwistedPoly<C>&, const TwistedPoly<C>&, const Budget&);   \
    template TwistedPoly<C> twisted_pow(const TwistedPoly<C>&, const BigInt&, const Budget&);           \
    template DynPoly<C> to_dynpoly(const TwistedPoly<C>&);                                              \
    template TwistedPoly<C> from_dynpoly(const DynPoly<C>&);                                            \
    template bool commute_at_iterate(const TwistedPoly<C>&, const TwistedPoly<C>&, const BigInt&,       \
                                     const Budget&);                                                     \
    template C twisted_eval(const TwistedPoly<C>&, const C&);

ORBITLAB_INSTANTIATE(RatFunc)
ORBITLAB_INSTANTIATE(ExtElem)

#undef ORBITLAB_INSTANTIATE

}  // namespace orbitlab
