#include "orbitlab/dynpoly.hpp"

#include <algorithm>
#include <map>

#include "orbitlab/numtheory.hpp"

namespace orbitlab {

namespace {

// Powers of a fixed base, reusing the chain base^(p^j).
template <class C>
class PowerCache {
public:
    explicit PowerCache(C base) : chain_{std::move(base)} {}

    C pow(const BigInt& e) {
        if (e == 0) return chain_[0].one_like();
        if (e == 1) return chain_[0];
        const C one = chain_[0].one_like();
        const std::uint64_t p = one.characteristic();
        auto digits = base_digits(e, p);
        while (chain_.size() < digits.size()) chain_.push_back(chain_.back().frobenius(1));
        std::optional<C> acc;
        for (std::size_t j = 0; j < digits.size(); ++j) {
            if (!digits[j]) continue;
            C f = small_pow(chain_[j], digits[j], one);
            acc = acc ? *acc * f : f;
        }
        return *acc;
    }

private:
    std::vector<C> chain_;
};

// Same idea for polynomial powers of a DynPoly.
template <class C>
class PolyPowerCache {
public:
    explicit PolyPowerCache(DynPoly<C> base) : chain_{std::move(base)} {}

    DynPoly<C> pow(const BigInt& e) {
        const DynPoly<C> one = DynPoly<C>::constant(chain_[0].ring_zero().one_like());
        if (e == 0) return one;
        if (e == 1) return chain_[0];
        const std::uint64_t p = chain_[0].ring_zero().characteristic();
        auto digits = base_digits(e, p);
        while (chain_.size() < digits.size()) chain_.push_back(chain_.back().frobenius_power(1));
        std::optional<DynPoly<C>> acc;
        for (std::size_t j = 0; j < digits.size(); ++j) {
            if (!digits[j]) continue;
            DynPoly<C> f = small_pow(chain_[j], digits[j], one);
            acc = acc ? *acc * f : f;
        }
        return *acc;
    }

private:
    std::vector<DynPoly<C>> chain_;
};

template <class C>
bool compound(const C& c, std::string& text) {
    text = c.str();
    return text.find(' ') != std::string::npos || text.find('/') != std::string::npos;
}

}  // namespace

template <class C>
DynPoly<C> DynPoly<C>::constant(const C& c) {
    DynPoly out(c.zero_like());
    if (!c.is_zero()) out.terms_.push_back({BigInt(0), c});
    return out;
}

template <class C>
DynPoly<C> DynPoly<C>::monomial(const C& c, BigInt exp) {
    DynPoly out(c.zero_like());
    if (!c.is_zero()) out.terms_.push_back({std::move(exp), c});
    return out;
}

template <class C>
DynPoly<C> DynPoly<C>::x(const C& any) {
    return monomial(any.one_like(), BigInt(1));
}

template <class C>
DynPoly<C> DynPoly<C>::from_terms(C zero, std::vector<Term> terms) {
    DynPoly out(std::move(zero));
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
    for (auto& t : terms) {
        if (t.exp < 0) fail(ErrorKind::InvalidArgument, "negative exponent in polynomial");
        if (!out.terms_.empty() && out.terms_.back().exp == t.exp) {
            out.terms_.back().coef += t.coef;
        } else {
            if (!out.terms_.empty() && out.terms_.back().coef.is_zero()) out.terms_.pop_back();
            out.terms_.push_back(std::move(t));
        }
    }
    if (!out.terms_.empty() && out.terms_.back().coef.is_zero()) out.terms_.pop_back();
    return out;
}

template <class C>
C DynPoly<C>::coefficient(const BigInt& exp) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                               [](const Term& t, const BigInt& e) { return t.exp < e; });
    if (it != terms_.end() && it->exp == exp) return it->coef;
    return zero_;
}

template <class C>
DynPoly<C> DynPoly<C>::operator+(const DynPoly& o) const {
    std::vector<Term> all = terms_;
    all.insert(all.end(), o.terms_.begin(), o.terms_.end());
    return from_terms(zero_, std::move(all));
}

template <class C>
DynPoly<C> DynPoly<C>::operator-(const DynPoly& o) const {
    return *this + (-o);
}

template <class C>
DynPoly<C> DynPoly<C>::operator-() const {
    DynPoly out(*this);
    for (auto& t : out.terms_) t.coef = -t.coef;
    return out;
}

template <class C>
DynPoly<C> DynPoly<C>::operator*(const DynPoly& o) const {
    if (is_zero() || o.is_zero()) return DynPoly(zero_);
    std::vector<Term> all;
    all.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) all.push_back({a.exp + b.exp, a.coef * b.coef});
    return from_terms(zero_, std::move(all));
}

template <class C>
DynPoly<C> DynPoly<C>::scaled(const C& c) const {
    if (c.is_zero()) return DynPoly(zero_);
    DynPoly out(*this);
    for (auto& t : out.terms_) t.coef = t.coef * c;
    return out;
}

template <class C>
bool DynPoly<C>::operator==(const DynPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].exp != o.terms_[i].exp || terms_[i].coef != o.terms_[i].coef) return false;
    return true;
}

template <class C>
DynPoly<C> DynPoly<C>::frobenius_power(const BigInt& k) const {
    DynPoly out(*this);
    BigInt q = big_pow(BigInt(zero_.characteristic()), static_cast<std::uint64_t>(k));
    for (auto& t : out.terms_) {
        t.exp *= q;
        t.coef = t.coef.frobenius(k);
    }
    return out;
}

template <class C>
DynPoly<C> DynPoly<C>::pow(const BigInt& e) const {
    if (terms_.size() == 1) return monomial(terms_[0].coef.pow(e), terms_[0].exp * e);
    return PolyPowerCache<C>(*this).pow(e);
}

template <class C>
C DynPoly<C>::evaluate(const C& at) const {
    if (terms_.empty()) return zero_;
    PowerCache<C> cache(at);
    C acc = zero_;
    for (const auto& t : terms_) acc += t.coef * cache.pow(t.exp);
    return acc;
}

template <class C>
std::string DynPoly<C>::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t i = terms_.size(); i-- > 0;) {
        const auto& t = terms_[i];
        if (!out.empty()) out += " + ";
        std::string c;
        bool cmp = compound(t.coef, c);
        if (t.exp == 0) {
            out += c;
            continue;
        }
        if (!t.coef.is_one()) out += (cmp ? "(" + c + ")" : c) + "*";
        out += "x";
        if (t.exp != 1) out += "^" + t.exp.str();
    }
    return out;
}

template <class C>
std::string DynPoly<C>::key() const {
    std::string out;
    for (const auto& t : terms_) {
        out += t.exp.str();
        out += ':';
        t.coef.append_key(out);
        out += ';';
    }
    return out;
}

template <class C>
LinearMap<C> LinearMap<C>::inverse() const {
    C inv = scale.one_like() / scale;
    return {inv, -(shift * inv)};
}

template <class C>
DynPoly<C> LinearMap<C>::as_poly() const {
    using T = typename DynPoly<C>::Term;
    return DynPoly<C>::from_terms(scale.zero_like(), {T{BigInt(0), shift}, T{BigInt(1), scale}});
}

template <class C>
std::string LinearMap<C>::str() const {
    return as_poly().str();
}

template <class C>
DynPoly<C> compose(const DynPoly<C>& f, const DynPoly<C>& g, const Budget& budget) {
    BigInt work = BigInt(f.size()) * f.degree() * g.degree();
    if (work > budget.degree_budget)
        fail(ErrorKind::DegreeBudgetExceeded,
             "composition needs " + work.str() + " work units, budget is " + budget.degree_budget.str());
    using T = typename DynPoly<C>::Term;
    std::vector<T> all;
    PolyPowerCache<C> cache(g);
    for (const auto& t : f.terms()) {
        DynPoly<C> gp = cache.pow(t.exp);
        for (const auto& u : gp.terms()) all.push_back({u.exp, t.coef * u.coef});
    }
    return DynPoly<C>::from_terms(f.ring_zero(), std::move(all));
}

template <class C>
DynPoly<C> iterate(const DynPoly<C>& f, std::uint64_t n, const Budget& budget) {
    DynPoly<C> acc = DynPoly<C>::x(f.ring_zero());
    for (std::uint64_t i = 0; i < n; ++i) acc = compose(acc, f, budget);
    return acc;
}

template <class C>
C orbit_element(const DynPoly<C>& f, const C& gamma, std::uint64_t n) {
    C cur = gamma;
    for (std::uint64_t i = 0; i < n; ++i) cur = f.evaluate(cur);
    return cur;
}

template <class C>
DynPoly<C> conjugate(const DynPoly<C>& f, const LinearMap<C>& mu) {
    Budget unlimited;
    unlimited.degree_budget = BigInt(1) << 4000;
    DynPoly<C> inner = compose(f, mu.inverse().as_poly(), unlimited);
    return inner.scaled(mu.scale) + DynPoly<C>::constant(mu.shift);
}

template <class C>
bool is_additive(const DynPoly<C>& f) {
    const std::uint64_t p = f.ring_zero().characteristic();
    for (const auto& t : f.terms())
        if (exact_log(t.exp, p) < 0) return false;
    return true;
}

ExtDynPoly lift(const KDynPoly& f, const ExtPtr& ring) {
    std::vector<ExtDynPoly::Term> terms;
    for (const auto& t : f.terms()) terms.push_back({t.exp, ExtElem(ring, t.coef)});
    return ExtDynPoly::from_terms(ExtElem(ring), std::move(terms));
}

LinearMap<ExtElem> lift(const LinearMap<RatFunc>& mu, const ExtPtr& ring) {
    return {ExtElem(ring, mu.scale), ExtElem(ring, mu.shift)};
}

KPoly to_kpoly(const KDynPoly& f) {
    const FieldPtr& field = f.ring_zero().field();
    if (f.degree() > (BigInt(1) << 26)) fail(ErrorKind::DegreeBudgetExceeded, "degree too large for dense form");
    std::vector<RatFunc> c(static_cast<std::size_t>(f.degree()) + 1, RatFunc(field));
    for (const auto& t : f.terms()) c[static_cast<std::size_t>(t.exp)] = t.coef;
    return KPoly(field, std::move(c));
}

namespace {

// Monic divisors of p of degree <= bound, by degree then by coefficient index.
std::vector<FFPoly> monic_divisors(const FFPoly& p, unsigned bound, std::size_t cap) {
    const FieldPtr& field = p.field();
    const std::uint64_t q = field->order();
    std::vector<FFPoly> out;
    out.push_back(FFPoly::constant(field, 1));
    BigInt maxdeg = p.degree();
    std::size_t spent = 0;
    for (unsigned d = 1; d <= bound && BigInt(d) <= maxdeg; ++d) {
        // q^d candidates of degree d
        BigInt count = big_pow(BigInt(q), d);
        if (BigInt(spent) + count > BigInt(cap)) break;
        std::uint64_t n = static_cast<std::uint64_t>(count);
        spent += n;
        for (std::uint64_t idx = 0; idx < n; ++idx) {
            std::vector<FFPoly::Term> terms;
            std::uint64_t v = idx;
            for (unsigned i = 0; i < d; ++i) {
                if (v % q) terms.push_back({BigInt(i), v % q});
                v /= q;
            }
            terms.push_back({BigInt(d), 1});
            FFPoly cand = FFPoly::from_terms(field, std::move(terms));
            if (p.rem(cand).is_zero()) out.push_back(std::move(cand));
        }
    }
    return out;
}

// Evaluate a dense K-polynomial at a point, skipping zero coefficients.
RatFunc eval_sparse(const KPoly& p, const RatFunc& at) {
    PowerCache<RatFunc> cache(at);
    RatFunc acc(p.field());
    const auto& c = p.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!c[i].is_zero()) acc += c[i] * cache.pow(BigInt(i));
    return acc;
}

}  // namespace

std::optional<RatFunc> find_root_in_k(const KPoly& p, const RootSearch& search) {
    const FieldPtr& field = p.field();
    if (p.is_zero()) return RatFunc(field);
    if (p.degree() < 1) return std::nullopt;
    if (p.coeff(0).is_zero()) return RatFunc(field);
    // Clear denominators.
    FFPoly l = FFPoly::constant(field, 1);
    for (const auto& c : p.coeffs()) {
        if (c.is_zero() || c.den().is_one()) continue;
        FFPoly g = gcd(l, c.den());
        l = l * c.den().exact_div(g);
    }
    auto integral = [&](const RatFunc& c) { return c.num() * l.exact_div(c.den()); };
    FFPoly a0 = integral(p.coeff(0)), an = integral(p.leading());
    auto nums = monic_divisors(a0, search.height_bound, search.enumeration_cap);
    auto dens = monic_divisors(an, search.height_bound, search.enumeration_cap);
    const std::uint64_t q = field->order();
    for (const auto& v : dens)
        for (const auto& u : nums) {
            if (!gcd(u, v).is_one()) continue;
            for (std::uint64_t unit = 1; unit < q; ++unit) {
                RatFunc cand(u.scaled(unit), v);
                if (eval_sparse(p, cand).is_zero()) return cand;
            }
        }
    return std::nullopt;
}

AdditiveConjugacy conjugate_to_additive(const KDynPoly& f, const Budget& budget, const RootSearch& search) {
    if (f.degree() < 2) fail(ErrorKind::InvalidArgument, "conjugate_to_additive needs degree >= 2");
    if (f.degree() > budget.degree_budget)
        fail(ErrorKind::DegreeBudgetExceeded, "degree " + f.degree().str() + " exceeds the degree budget");
    const FieldPtr& field = f.ring_zero().field();
    const std::uint64_t p = field->characteristic();

    // Coefficient of x^j in f(x - b) + b, as a polynomial in b, for j = 0 and j not a power of p.
    std::map<BigInt, std::map<std::uint64_t, RatFunc>> cond;
    BigInt work = 0;
    for (const auto& t : f.terms()) {
        auto kd = base_digits(t.exp, p);
        std::vector<std::uint64_t> jd(kd.size(), 0);
        // Lucas: C(k, j) != 0 mod p exactly when j is digit-dominated by k.
        while (true) {
            BigInt j = 0;
            std::uint64_t binom = 1;
            for (std::size_t i = kd.size(); i-- > 0;) {
                j = j * p + jd[i];
                binom = binom * binom_mod(BigInt(kd[i]), BigInt(jd[i]), p) % p;
            }
            if (j == 0 || exact_log(j, p) < 0) {
                if (++work > budget.degree_budget)
                    fail(ErrorKind::DegreeBudgetExceeded, "shift conditions exceed the degree budget");
                auto bdeg = static_cast<std::uint64_t>(t.exp - j);
                RatFunc c = t.coef.scaled(field->from_int(static_cast<long long>(binom)));
                if (bdeg % 2 == 1) c = -c;
                auto& slot = cond[j];
                auto it = slot.find(bdeg);
                if (it == slot.end()) slot.emplace(bdeg, c);
                else it->second += c;
            }
            std::size_t i = 0;
            while (i < kd.size() && jd[i] == kd[i]) jd[i++] = 0;
            if (i == kd.size()) break;
            ++jd[i];
        }
    }
    {
        auto& slot = cond[BigInt(0)];
        auto it = slot.find(1);
        if (it == slot.end()) slot.emplace(1, RatFunc::constant(field, 1));
        else it->second += RatFunc::constant(field, 1);
    }

    KPoly g(field);
    for (const auto& [j, poly] : cond) {
        std::uint64_t top = poly.rbegin()->first;
        std::vector<RatFunc> c(top + 1, RatFunc(field));
        for (const auto& [e, v] : poly) c[e] = v;
        KPoly pj(field, std::move(c));
        if (!pj.is_zero()) g = gcd(g, pj);
    }

    AdditiveConjugacy out(g);
    const RatFunc zero(field);
    if (g.is_zero()) {
        out.outcome = AdditiveConjugacy::Outcome::Conjugate;
        out.map_in_k = LinearMap<RatFunc>::identity(zero);
        out.form_in_k = f;
        return out;
    }
    if (g.degree() == 0) return out;
    out.outcome = AdditiveConjugacy::Outcome::Conjugate;
    if (auto b = find_root_in_k(g, search)) {
        out.map_in_k = LinearMap<RatFunc>::translation(*b);
        out.form_in_k = conjugate(f, *out.map_in_k);
        return out;
    }
    out.ring = ExtRing::create(g);
    out.map_in_ext = LinearMap<ExtElem>::translation(ExtElem::generator(out.ring));
    out.form_in_ext = conjugate(lift(f, out.ring), *out.map_in_ext);
    out.witness_ring_may_not_be_field = true;
    return out;
}

AffineShift solve_affine_conjugacy(const KDynPoly& f, const RatFunc& gamma, const Budget& budget,
                                   const RootSearch& search) {
    if (!is_additive(f)) fail(ErrorKind::NotAdditive, "solve_affine_conjugacy needs an additive polynomial");
    if (f.degree() < 2) fail(ErrorKind::InvalidArgument, "solve_affine_conjugacy needs degree >= 2");
    if (f.degree() > budget.degree_budget)
        fail(ErrorKind::DegreeBudgetExceeded, "degree " + f.degree().str() + " exceeds the degree budget");
    AffineShift out;
    if (gamma.is_zero()) {
        out.in_k = gamma;
        return out;
    }
    const FieldPtr& field = gamma.field();
    KPoly h = to_kpoly(f) - KPoly::variable(field) - KPoly::constant(gamma);
    if (auto d = find_root_in_k(h, search)) {
        out.in_k = *d;
        return out;
    }
    out.ring = ExtRing::create(h);
    out.in_ext = ExtElem::generator(out.ring);
    return out;
}

template <class C>
std::optional<std::pair<std::uint64_t, std::uint64_t>> common_iterate(const DynPoly<C>& f, const DynPoly<C>& g,
                                                                      std::uint64_t cap_m, std::uint64_t cap_n,
                                                                      const Budget& budget) {
    if (f.degree() < 2 || g.degree() < 2) fail(ErrorKind::InvalidArgument, "common_iterate needs degrees >= 2");
    if (f.degree() > BigInt(UINT64_MAX) || g.degree() > BigInt(UINT64_MAX)) return std::nullopt;
    auto dep = multiplicative_dependence(static_cast<std::uint64_t>(f.degree()), static_cast<std::uint64_t>(g.degree()));
    if (!dep) return std::nullopt;
    auto [r, s] = *dep;
    DynPoly<C> fm = DynPoly<C>::x(f.ring_zero()), gn = DynPoly<C>::x(g.ring_zero());
    std::uint64_t m = 0, n = 0;
    for (std::uint64_t k = 1; k * r <= cap_m && k * s <= cap_n; ++k) {
        for (; m < k * r; ++m) fm = compose(fm, f, budget);
        for (; n < k * s; ++n) gn = compose(gn, g, budget);
        if (fm == gn) return std::make_pair(m, n);
    }
    return std::nullopt;
}

#define ORBITLAB_INSTANTIATE(C)                                                                              \
    template class DynPoly<C>;                                                                               \
    template struct LinearMap<C>;                                                                            \
    template DynPoly<C> compose(const DynPoly<C>&, const DynPoly<C>&, const Budget&);                       \
    template DynPoly<C> iterate(const DynPoly<C>&, std::uint64_t, const Budget&);                          \
    template C orbit_element(const DynPoly<C>&, const C&, std::uint64_t);                                  \
    template DynPoly<C> conjugate(const DynPoly<C>&, const LinearMap<C>&);                                 \
    template bool is_additive(const DynPoly<C>&);                                                            \
    template std::optional<std::pair<std::uint64_t, std::uint64_t>> common_iterate(                         \
        const DynPoly<C>&, const DynPoly<C>&, std::uint64_t, std::uint64_t, const Budget&);

ORBITLAB_INSTANTIATE(RatFunc)
ORBITLAB_INSTANTIATE(ExtElem)

#undef ORBITLAB_INSTANTIATE

}  // namespace orbitlab
