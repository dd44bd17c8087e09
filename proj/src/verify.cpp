#include "orbitlab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "orbitlab/parse.hpp"

namespace orbitlab {

const char* status_name(CheckResult::Status s) {
    switch (s) {
        case CheckResult::Status::Pass: return "PASS";
        case CheckResult::Status::Fail: return "FAIL";
        case CheckResult::Status::Skipped: return "SKIPPED";
    }
    return "?";
}

namespace {

constexpr std::size_t kMaxShown = 4000;

std::string clip(std::string s) {
    if (s.size() > kMaxShown) {
        const auto total = s.size();
        s.resize(kMaxShown);
        s += " ... (" + std::to_string(total) + " chars)";
    }
    return s;
}

// Records the first failing identity.
class Recorder {
public:
    explicit Recorder(std::string name) { r_.name = std::move(name); }

    template <class A, class B>
    bool expect_eq(const A& lhs, const B& rhs, const std::string& what) {
        if (lhs == rhs) return true;
        fail(what, show(lhs), show(rhs));
        return false;
    }

    bool expect(bool ok, const std::string& what, const std::string& lhs = {}, const std::string& rhs = {}) {
        if (!ok) fail(what, lhs, rhs);
        return ok;
    }

    bool failed() const { return r_.status == CheckResult::Status::Fail; }
    void note(std::string s) {
        if (!failed()) r_.detail = std::move(s);
    }
    CheckResult finish() { return r_; }

private:
    template <class T>
    static std::string show(const T& v) {
        if constexpr (std::is_same_v<T, BigInt>)
            return v.str();
        else
            return v.str();
    }

    void fail(const std::string& what, std::string lhs, std::string rhs) {
        if (failed()) return;
        r_.status = CheckResult::Status::Fail;
        r_.detail = what;
        r_.lhs = clip(std::move(lhs));
        r_.rhs = clip(std::move(rhs));
    }

    CheckResult r_;
};

RatFunc t_of(const FieldPtr& field) { return RatFunc::t(field); }

RatFunc t_pow(const FieldPtr& field, BigInt e) { return RatFunc(FFPoly::monomial(field, 1, std::move(e))); }

BigInt bpow(std::uint64_t b, std::uint64_t e) { return big_pow(BigInt(b), e); }

RatFunc binom_times(const BigInt& m, std::uint64_t i, const RatFunc& v) {
    const auto c = binom_mod(m, i, v.characteristic());
    if (c == 0) return v.zero_like();
    return v.scaled(c);
}

KDynPoly x_over(const FieldPtr& field) { return KDynPoly::x(RatFunc(field)); }

}  // namespace

FieldPtr gf_pr(std::uint64_t p, unsigned r) {
    if (r <= 1) return FiniteField::prime(p);
    return parse_field_spec("GF(" + std::to_string(p) + "^" + std::to_string(r) + ")");
}

KDynPoly quadratic_pair_f() { return parse_dynpoly("x^2 + x", FiniteField::prime(2)); }
KDynPoly quadratic_pair_g() { return parse_dynpoly("x^2 + t^2 + t", FiniteField::prime(2)); }

CheckResult check_shifted_square_orbit(const KDynPoly& g, unsigned m_max) {
    Recorder rec("shifted-square-orbit");
    const auto field = g.ring_zero().field();
    RatFunc cur = g.ring_zero();
    for (unsigned m = 1; m <= m_max; ++m) {
        cur = g.evaluate(cur);
        const RatFunc rhs = t_pow(field, bpow(2, m)) + t_of(field);
        if (!rec.expect_eq(cur, rhs, "g^" + std::to_string(m) + "(0)")) break;
    }
    rec.note("m <= " + std::to_string(m_max));
    return rec.finish();
}

CheckResult check_sum_map_orbit(const KDynPoly& f, unsigned k_max) {
    Recorder rec("sum-map-orbit");
    const auto field = f.ring_zero().field();
    RatFunc cur = t_of(field);
    std::uint64_t done = 0;
    for (unsigned k = 0; k <= k_max; ++k) {
        const std::uint64_t n = std::uint64_t{1} << k;
        for (; done < n; ++done) cur = f.evaluate(cur);
        const RatFunc rhs = t_pow(field, big_pow(BigInt(2), static_cast<std::uint64_t>(n))) + t_of(field);
        if (!rec.expect_eq(cur, rhs, "f^(2^" + std::to_string(k) + ")(t)")) break;
    }
    rec.note("k <= " + std::to_string(k_max));
    return rec.finish();
}

CheckResult check_linear_orbits(const FieldPtr& field, const RatFunc& d, unsigned r, unsigned n_max) {
    Recorder rec("linear-orbits[p=" + std::to_string(field->characteristic()) + ",r=" + std::to_string(r) + "]");
    const RatFunc t = t_of(field);
    const RatFunc one = t.one_like();
    const RatFunc eps = d / (t - one);
    const KDynPoly f = KDynPoly::monomial(t, 1) + KDynPoly::constant(d);
    const KDynPoly xr = KDynPoly::monomial(one, r);
    const KDynPoly g = conjugate(xr, LinearMap<RatFunc>::translation(-eps));
    RatFunc a = one - eps;
    RatFunc b = t - eps;
    for (unsigned n = 0; n <= n_max && !rec.failed(); ++n) {
        rec.expect_eq(a, t.pow(n) - eps, "f^" + std::to_string(n) + "(alpha)");
        rec.expect_eq(b, t_pow(field, bpow(r, n)) - eps, "g^" + std::to_string(n) + "(beta)");
        a = f.evaluate(a);
        b = g.evaluate(b);
    }
    rec.note("n <= " + std::to_string(n_max) + ", delta = " + d.str());
    return rec.finish();
}

CheckResult check_twisted_iterates(const KTwisted& f, unsigned m_max, unsigned k_max, const Budget& budget) {
    const auto field = f.ring_zero().field();
    const std::uint64_t p = field->characteristic();
    Recorder rec("twisted-iterates[p=" + std::to_string(p) + ", f=" + f.str() + "]");
    const RatFunc t = t_of(field);
    const KTwisted gt = f + KTwisted::identity(t);
    const RatFunc ft = twisted_eval(f, t);
    const KDynPoly g = to_dynpoly(gt) + KDynPoly::constant(ft);

    // f^i(t) for i <= m_max
    std::vector<RatFunc> fi{t};
    for (unsigned i = 1; i <= m_max; ++i) fi.push_back(twisted_eval(f, fi.back()));

    KTwisted gm = KTwisted::identity(t);
    RatFunc pointwise = t.zero_like();
    for (unsigned m = 1; m <= m_max && !rec.failed(); ++m) {
        gm = twisted_mul(gm, gt, budget);
        pointwise = g.evaluate(pointwise);
        const bool spot = exact_log(BigInt(m), p) >= 0 || m == m_max;
        if (spot) rec.expect_eq(gm, twisted_pow(gt, BigInt(m), budget), "twisted power at m = " + std::to_string(m));
        RatFunc rhs = t.zero_like();
        for (unsigned i = 1; i <= m; ++i) rhs += binom_times(BigInt(m), i, fi[i]);
        // g = tau_{-t} o gt o tau_t, so g^m(0) = gt^m(t) - t
        const RatFunc lhs = twisted_eval(gm, t) - t;
        rec.expect_eq(lhs, rhs, "g^" + std::to_string(m) + "(0) via twisted power");
        rec.expect_eq(pointwise, rhs, "g^" + std::to_string(m) + "(0) by iteration");
    }
    for (unsigned k = 0; k <= k_max && !rec.failed(); ++k) {
        const BigInt n = bpow(p, k);
        const RatFunc lhs = twisted_eval(twisted_pow(gt, n, budget), t) - t;
        const RatFunc rhs = twisted_eval(twisted_pow(f, n, budget), t);
        rec.expect_eq(lhs, rhs, "g^(p^" + std::to_string(k) + ")(0) = f^(p^" + std::to_string(k) + ")(t)");
        if (n <= m_max) rec.expect_eq(fi[static_cast<std::size_t>(n)], rhs, "f^(p^k)(t) by iteration");
    }
    rec.note("m <= " + std::to_string(m_max) + ", k <= " + std::to_string(k_max));
    return rec.finish();
}

CheckResult check_linear_twist_orbits(const FieldPtr& field, const RatFunc& lambda, unsigned r, unsigned m_max,
                                      unsigned k_max, const Budget& budget) {
    const std::uint64_t p = field->characteristic();
    Recorder rec("linear-twist-orbits[p=" + std::to_string(p) + ",r=" + std::to_string(r) + "]");
    const RatFunc t = t_of(field);
    const RatFunc zero = t.zero_like();
    std::vector<RatFunc> gc(r + 1, zero);
    gc[0] = lambda;
    gc[r] = t.one_like();
    const KTwisted gt(zero, gc);

    for (unsigned m = 1; m <= m_max && !rec.failed(); ++m) {
        std::vector<RatFunc> expect(static_cast<std::size_t>(r) * m + 1, zero);
        for (unsigned i = 0; i <= m; ++i) expect[r * (m - i)] += binom_times(BigInt(m), i, lambda.pow(i));
        rec.expect_eq(twisted_pow(gt, BigInt(m), budget), KTwisted(zero, expect),
                      "binomial expansion at m = " + std::to_string(m));
    }

    const KDynPoly g = conjugate(to_dynpoly(gt), LinearMap<RatFunc>::translation(-(lambda * t)));
    const KDynPoly f = KDynPoly::monomial(t.one_like(), p);
    const RatFunc start = (t.one_like() - lambda) * t;
    for (unsigned k = 0; k <= k_max && !rec.failed(); ++k) {
        const std::uint64_t n = static_cast<std::uint64_t>(bpow(p, static_cast<std::uint64_t>(r) * k));
        const RatFunc via_twisted = twisted_eval(twisted_pow(gt, BigInt(n), budget), t) - lambda * t;
        const RatFunc by_iteration = orbit_element(g, start, n);
        const RatFunc mid = t_pow(field, bpow(p, r * n));
        const RatFunc rhs = orbit_element(f, t, r * n);
        const std::string tag = " at k = " + std::to_string(k);
        rec.expect_eq(via_twisted, mid, "g^(p^(rk))((1-lambda)t) via twisted power" + tag);
        rec.expect_eq(by_iteration, mid, "g^(p^(rk))((1-lambda)t) by iteration" + tag);
        rec.expect_eq(rhs, mid, "f^(r p^(rk))(t)" + tag);
    }
    rec.note("lambda = " + lambda.str() + ", m <= " + std::to_string(m_max) + ", k <= " + std::to_string(k_max));
    return rec.finish();
}

CheckResult check_conjugated_family(const std::string& label, const KDynPoly& f, const KDynPoly& h, unsigned m,
                                    const RatFunc& alpha, const RatFunc& delta, unsigned k_max, const Budget& budget) {
    const std::uint64_t p = alpha.characteristic();
    Recorder rec("conjugated-family[" + label + "]");
    const KDynPoly inner = iterate(f, m, budget) + h;
    const KDynPoly g = conjugate(inner, LinearMap<RatFunc>::translation(delta));
    for (unsigned k = 0; k <= k_max && !rec.failed(); ++k) {
        const std::uint64_t n = static_cast<std::uint64_t>(bpow(p, k));
        const RatFunc lhs = orbit_element(g, alpha + delta, n);
        const RatFunc rhs = orbit_element(f, alpha, m * n) + orbit_element(h, alpha, n) + delta;
        rec.expect_eq(lhs, rhs, "g^(p^" + std::to_string(k) + ")(alpha + delta)");
    }
    rec.note("f = " + f.str() + ", h = " + h.str() + ", m = " + std::to_string(m) + ", k <= " + std::to_string(k_max));
    return rec.finish();
}

CheckResult check_sum_power_identity(std::uint64_t p, unsigned n_max, const Budget& budget) {
    Recorder rec("sum-power-identity[p=" + std::to_string(p) + "]");
    const auto field = FiniteField::prime(p);
    const RatFunc one = RatFunc::constant(field, 1);
    FFPoly base(field);
    for (std::uint64_t i = 0; i < p; ++i) base = base + FFPoly::monomial(field, 1, i);
    const KTwisted a(one.zero_like(), std::vector<RatFunc>(p, one));
    for (unsigned n = 1; n <= n_max && !rec.failed(); ++n) {
        const BigInt pn = bpow(p, n);
        const BigInt e = (pn - 1) / (p - 1);
        FFPoly rhs(field);
        for (BigInt i = 0; i < pn; ++i) rhs = rhs + FFPoly::monomial(field, 1, i);
        const FFPoly lhs = base.pow(e);
        rec.expect(lhs == rhs, "polynomial identity at n = " + std::to_string(n), lhs.str(), rhs.str());
        // The same coefficients arise as the twisted power of sum_{i<p} T^i.
        const KTwisted tw = twisted_pow(a, e, budget);
        std::vector<RatFunc> coeffs;
        for (BigInt i = 0; i <= lhs.degree(); ++i) coeffs.push_back(RatFunc::constant(field, lhs.coefficient(i)));
        rec.expect_eq(tw, KTwisted(one.zero_like(), coeffs), "twisted cross-check at n = " + std::to_string(n));
    }
    rec.note("n <= " + std::to_string(n_max));
    return rec.finish();
}

CheckResult check_artin_schreier_family(std::uint64_t p, unsigned n_max, const Budget& budget) {
    Recorder rec("artin-schreier-family[p=" + std::to_string(p) + "]");
    const auto field = FiniteField::prime(p);
    const RatFunc t = t_of(field);
    const RatFunc one = t.one_like();
    const RatFunc zero = t.zero_like();
    const KTwisted a(zero, std::vector<RatFunc>(p, one));
    const KDynPoly f = to_dynpoly(a);
    const KDynPoly g = KDynPoly::monomial(one, p) + KDynPoly::constant(t);

    std::vector<RatFunc> mc(p + 1, zero);
    mc[0] = -t;
    mc[1] = -one;
    mc[p] = one;
    const ExtPtr ring = ExtRing::create(KPoly(field, mc));
    const ExtElem delta = ExtElem::generator(ring);
    const auto mu = LinearMap<ExtElem>::translation(delta);
    const ExtDynPoly f1 = conjugate(lift(f, ring), mu);
    const ExtDynPoly g1 = conjugate(lift(g, ring), mu);
    rec.expect_eq(g1, ExtDynPoly::monomial(delta.one_like(), p), "g1 = x^p");

    for (unsigned n = 1; n <= n_max && !rec.failed(); ++n) {
        const BigInt pn = bpow(p, n);
        const BigInt e = (pn - 1) / (p - 1);
        std::vector<RatFunc> ones(static_cast<std::size_t>(pn), one);
        rec.expect_eq(twisted_pow(a, e, budget), KTwisted(zero, ones), "f^e at n = " + std::to_string(n));

        RatFunc sum = zero;
        for (std::uint64_t i = 0; i < pn; ++i) sum += t.frobenius(i);
        const ExtElem rhs = ExtElem(ring, sum) + delta;
        const ExtElem lhs = orbit_element(f1, ExtElem(ring, t) + delta, static_cast<std::uint64_t>(e));
        const ExtElem mid = orbit_element(g1, delta, static_cast<std::uint64_t>(pn));
        rec.expect_eq(lhs, rhs, "f1^e(t + delta) at n = " + std::to_string(n));
        rec.expect_eq(mid, rhs, "g1^(p^n)(delta) at n = " + std::to_string(n));
    }

    if (p % 2 == 1) {
        const RatFunc at = one;
        for (unsigned r = 1; r <= 3 && !rec.failed(); ++r) {
            const RatFunc fr1 = orbit_element(f, at, r);
            rec.expect(fr1.is_zero(), "f^" + std::to_string(r) + "(1) = 0", fr1.str(), "0");
            const KDynPoly fr = to_dynpoly(twisted_pow(a, BigInt(r), budget));
            // x^(p^k) + x evaluates to 2 at 1, so it cannot equal f^r.
            for (std::uint64_t k = 0; k <= static_cast<std::uint64_t>(r) * (p - 1) && !rec.failed(); ++k) {
                const KDynPoly h = KDynPoly::monomial(one, bpow(p, k)) + KDynPoly::x(one);
                rec.expect(h.evaluate(at) == RatFunc::from_int(field, 2), "h(1) = 2", h.evaluate(at).str(), "2");
                rec.expect(fr != h, "f^" + std::to_string(r) + " differs from " + h.str(), fr.str(), h.str());
            }
        }
    }
    rec.note("n <= " + std::to_string(n_max));
    return rec.finish();
}

CheckResult check_nonsharing(const FieldPtr& field, const RatFunc& lambda, unsigned r, unsigned m_max) {
    const std::uint64_t p = field->characteristic();
    Recorder rec("orbit-nonsharing[p=" + std::to_string(p) + ",r=" + std::to_string(r) + "]");
    const RatFunc t = t_of(field);
    const RatFunc one = t.one_like();
    const KDynPoly gt = KDynPoly::monomial(lambda, 1) + KDynPoly::monomial(one, bpow(p, r));
    const KDynPoly g = conjugate(gt, LinearMap<RatFunc>::translation(-(lambda * t)));
    const KDynPoly f = KDynPoly::monomial(one, p);
    const RatFunc gamma = -(lambda * t);
    RatFunc gm = gamma;
    RatFunc fm = gamma;
    for (unsigned m = 1; m <= m_max && !rec.failed(); ++m) {
        gm = g.evaluate(gm);
        fm = f.evaluate(fm);
        rec.expect_eq(gm, gamma, "g^" + std::to_string(m) + "(-lambda t)");
        rec.expect(fm != gamma, "f^" + std::to_string(m) + "(-lambda t) leaves the point", fm.str(), gamma.str());
    }
    rec.note("m <= " + std::to_string(m_max));
    return rec.finish();
}

CheckResult check_affine_conjugacy(const KDynPoly& f, const RatFunc& gamma, const Budget& budget) {
    Recorder rec("affine-conjugacy[f=" + f.str() + ", gamma=" + gamma.str() + "]");
    const AffineShift s = solve_affine_conjugacy(f, gamma, budget);
    const KDynPoly f1 = f + KDynPoly::constant(gamma);
    if (s.in_k) {
        const RatFunc& d = *s.in_k;
        rec.expect_eq(f.evaluate(d) - d, gamma, "f(delta) - delta");
        rec.expect_eq(conjugate(f, LinearMap<RatFunc>::translation(-d)), f1, "tau_{-delta} o f o tau_delta");
        rec.note("delta = " + d.str());
    } else {
        const ExtElem& d = *s.in_ext;
        const ExtDynPoly fe = lift(f, s.ring);
        rec.expect_eq(fe.evaluate(d) - d, ExtElem(s.ring, gamma), "f(delta) - delta");
        rec.expect_eq(conjugate(fe, LinearMap<ExtElem>::translation(-d)), lift(f1, s.ring),
                      "tau_{-delta} o f o tau_delta");
        rec.note("delta = " + d.str() + " in K[y]/(" + s.ring->spec_string() + ")");
    }
    return rec.finish();
}

namespace {

using Job = std::function<CheckResult()>;

struct Planned {
    std::string name;
    std::uint64_t p;
    Job run;
};

CheckResult timed(const Planned& job) {
    const auto start = std::chrono::steady_clock::now();
    CheckResult r;
    try {
        r = job.run();
    } catch (const Error& e) {
        r.name = job.name;
        r.status = CheckResult::Status::Fail;
        r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

RatFunc random_poly(std::mt19937_64& rng, const FieldPtr& field, unsigned max_deg) {
    std::vector<FFPoly::Term> terms;
    std::uniform_int_distribution<std::uint64_t> coef(0, field->order() - 1);
    for (unsigned i = 0; i <= max_deg; ++i) terms.push_back({BigInt(i), coef(rng)});
    return RatFunc(FFPoly::from_terms(field, std::move(terms)));
}

// Additive f with F_p coefficients and tau-degree in [1, max_tau].
KTwisted random_prime_twisted(std::mt19937_64& rng, std::uint64_t p, unsigned max_tau) {
    const auto field = FiniteField::prime(p);
    const RatFunc zero(field);
    std::uniform_int_distribution<unsigned> deg(1, max_tau);
    std::uniform_int_distribution<std::uint64_t> coef(0, p - 1);
    std::uniform_int_distribution<std::uint64_t> nonzero(1, p - 1);
    const unsigned d = deg(rng);
    std::vector<RatFunc> c;
    for (unsigned i = 0; i < d; ++i) c.push_back(RatFunc::constant(field, coef(rng)));
    c.push_back(RatFunc::constant(field, nonzero(rng)));
    return KTwisted(zero, c);
}

std::vector<Planned> quadratic_pair_jobs(unsigned m_max, unsigned k_max) {
    return {{"shifted-square-orbit", 2, [=] { return check_shifted_square_orbit(quadratic_pair_g(), m_max); }},
            {"sum-map-orbit", 2, [=] { return check_sum_map_orbit(quadratic_pair_f(), k_max); }}};
}

std::vector<Planned> linear_jobs(const std::vector<std::uint64_t>& ps, unsigned n_max) {
    std::vector<Planned> out;
    for (auto p : ps) {
        out.push_back({"linear-orbits", p, [=] {
                           const auto field = FiniteField::prime(p);
                           const unsigned r = p == 2 ? 3 : 2;
                           const RatFunc d = p == 2 ? RatFunc::constant(field, 1) : t_pow(field, 2);
                           return check_linear_orbits(field, d, r, n_max);
                       }});
    }
    return out;
}

std::vector<Planned> twisted_jobs(const std::vector<std::uint64_t>& ps, std::uint64_t seed, unsigned m_cap,
                               const Budget& budget) {
    std::vector<Planned> out;
    std::mt19937_64 rng(seed);
    for (auto p : ps) {
        std::vector<KTwisted> seen;
        while (seen.size() < 3) {
            const KTwisted f = random_prime_twisted(rng, p, 3);
            if (std::find(seen.begin(), seen.end(), f) != seen.end()) continue;
            seen.push_back(f);
            const unsigned m_max = m_cap ? m_cap : static_cast<unsigned>(p * p * p);
            out.push_back({"twisted-iterates", p, [=] { return check_twisted_iterates(f, m_max, 3, budget); }});
        }
    }
    return out;
}

std::vector<Planned> linear_twist_jobs(const std::vector<std::uint64_t>& ps, unsigned m_max, const Budget& budget) {
    std::vector<Planned> out;
    for (auto p : ps) {
        out.push_back({"linear-twist-orbits", p, [=] {
                           const auto field = gf_pr(p, 2);
                           const RatFunc lambda = RatFunc::constant(field, field->gen_code());
                           return check_linear_twist_orbits(field, lambda, 2, m_max, 1, budget);
                       }});
    }
    return out;
}

std::vector<Planned> nonsharing_jobs(const std::vector<std::uint64_t>& ps, unsigned m_max) {
    std::vector<Planned> out;
    for (auto p : ps) {
        out.push_back({"orbit-nonsharing", p, [=] {
                           const auto field = gf_pr(p, 2);
                           const RatFunc lambda = RatFunc::constant(field, field->gen_code());
                           return check_nonsharing(field, lambda, 2, m_max);
                       }});
    }
    return out;
}

std::vector<Planned> conjugated_family_jobs(const std::vector<std::uint64_t>& ps, unsigned k_max, const Budget& budget) {
    std::vector<Planned> out;
    for (auto p : ps) {
        out.push_back({"conjugated-family", p, [=] {
                           const auto field = FiniteField::prime(p);
                           const RatFunc t = t_of(field);
                           const KDynPoly f = KDynPoly::monomial(t.one_like(), p) + KDynPoly::monomial(t, 1);
                           return check_conjugated_family("i,p=" + std::to_string(p), f, x_over(field), 1, t, -t, k_max, budget);
                       }});
    }
    for (auto p : ps) {
        out.push_back({"conjugated-family", p, [=] {
                           const auto field = gf_pr(p, 2);
                           const RatFunc t = t_of(field);
                           const RatFunc lambda = RatFunc::constant(field, field->gen_code());
                           const KDynPoly f = KDynPoly::monomial(t.one_like(), p);
                           const KDynPoly h = KDynPoly::monomial(lambda, 1);
                           return check_conjugated_family("ii,p=" + std::to_string(p) + ",r=2", f, h, 2, t, -(lambda * t), k_max,
                                             budget);
                       }});
    }
    return out;
}

std::vector<Planned> sum_power_jobs(const std::vector<std::uint64_t>& ps, unsigned n_max, const Budget& budget) {
    std::vector<Planned> out;
    for (auto p : ps) out.push_back({"sum-power-identity", p, [=] { return check_sum_power_identity(p, n_max, budget); }});
    return out;
}

std::vector<Planned> artin_schreier_jobs(const std::vector<std::uint64_t>& ps, unsigned n_max, const Budget& budget) {
    std::vector<Planned> out;
    for (auto p : ps) out.push_back({"artin-schreier-family", p, [=] { return check_artin_schreier_family(p, n_max, budget); }});
    return out;
}

std::vector<Planned> affine_jobs(const std::vector<std::uint64_t>& ps, int count, std::uint64_t seed,
                                  const Budget& budget) {
    std::vector<Planned> out;
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    for (int i = 0; i < count; ++i) {
        const std::uint64_t p = ps[static_cast<std::size_t>(i) % ps.size()];
        const auto field = FiniteField::prime(p);
        std::uniform_int_distribution<unsigned> deg(1, 2);
        const unsigned d = deg(rng);
        std::vector<RatFunc> c;
        for (unsigned j = 0; j < d; ++j) c.push_back(random_poly(rng, field, 1));
        c.push_back(RatFunc::constant(field, 1));
        const KDynPoly f = to_dynpoly(KTwisted(RatFunc(field), c));
        RatFunc gamma = random_poly(rng, field, 2);
        if (gamma.is_zero()) gamma = t_of(field);
        out.push_back({"affine-conjugacy", p, [=] { return check_affine_conjugacy(f, gamma, budget); }});
    }
    return out;
}

std::vector<CheckResult> run_jobs(const std::vector<Planned>& jobs, std::uint64_t pmax) {
    std::vector<CheckResult> out;
    for (const auto& job : jobs) {
        if (job.p > pmax) {
            CheckResult r;
            r.name = job.name + "[p=" + std::to_string(job.p) + "]";
            r.status = CheckResult::Status::Skipped;
            r.detail = "p = " + std::to_string(job.p) + " exceeds pmax = " + std::to_string(pmax);
            out.push_back(std::move(r));
            continue;
        }
        out.push_back(timed(job));
    }
    return out;
}

template <class V>
void append(std::vector<Planned>& dst, V&& src) {
    for (auto& j : src) dst.push_back(std::move(j));
}

std::vector<std::uint64_t> chars_or(std::uint64_t p, std::vector<std::uint64_t> defaults) {
    if (p == 0) return defaults;
    return {p};
}

}  // namespace

std::vector<CheckResult> verify_all(const VerifyOptions& opts) {
    std::vector<Planned> jobs;
    append(jobs, quadratic_pair_jobs(12, 4));
    append(jobs, linear_jobs({2, 3}, 10));
    append(jobs, twisted_jobs({2, 3, 5}, opts.seed, 0, opts.budget));
    append(jobs, linear_twist_jobs({2, 3}, 10, opts.budget));
    append(jobs, conjugated_family_jobs({2, 3}, 2, opts.budget));
    append(jobs, sum_power_jobs({2, 3, 5}, 4, opts.budget));
    append(jobs, artin_schreier_jobs({2, 3}, 3, opts.budget));
    append(jobs, nonsharing_jobs({2, 3}, 8));
    append(jobs, affine_jobs({2, 3}, 5, opts.seed, opts.budget));
    return run_jobs(jobs, opts.pmax);
}

std::vector<CheckResult> verify_example(const std::string& id, std::uint64_t p, std::uint64_t nmax,
                                        const VerifyOptions& opts) {
    if (p != 0 && !is_prime(p)) throw ValidationError("example", "p = " + std::to_string(p) + " is not prime");
    if (nmax > 64) throw ValidationError("example", "nmax must be at most 64");
    const auto n_or = [&](unsigned dflt) { return nmax ? static_cast<unsigned>(nmax) : dflt; };
    const auto need_small = [&](std::uint64_t bound) {
        if (p > bound) throw ValidationError("example", "example " + id + " needs p be at most " + std::to_string(bound));
    };
    std::vector<Planned> jobs;
    if (id == "1.3") {
        if (p != 0 && p != 2) throw ValidationError("example", "example id 1.3 requires p = 2");
        append(jobs, quadratic_pair_jobs(n_or(12), std::min(n_or(4), 10U)));
    } else if (id == "2.1") {
        append(jobs, affine_jobs(chars_or(p, {2, 3}), static_cast<int>(n_or(5)), opts.seed, opts.budget));
    } else if (id == "2.2" || id == "2.3") {
        append(jobs, linear_jobs(chars_or(p, {2, 3}), n_or(10)));
    } else if (id == "2.4") {
        need_small(7);
        append(jobs, twisted_jobs(chars_or(p, {2, 3, 5}), opts.seed, static_cast<unsigned>(nmax), opts.budget));
    } else if (id == "2.5") {
        need_small(7);
        append(jobs, linear_twist_jobs(chars_or(p, {2, 3}), n_or(10), opts.budget));
        append(jobs, nonsharing_jobs(chars_or(p, {2, 3}), n_or(8)));
    } else if (id == "2.6") {
        need_small(7);
        append(jobs, conjugated_family_jobs(chars_or(p, {2, 3}), std::min(n_or(2), 3U), opts.budget));
    } else if (id == "2.8") {
        need_small(7);
        append(jobs, sum_power_jobs(chars_or(p, {2, 3, 5}), std::min(n_or(4), 6U), opts.budget));
    } else if (id == "2.9") {
        need_small(5);
        append(jobs, artin_schreier_jobs(chars_or(p, {2, 3}), std::min(n_or(3), 4U), opts.budget));
    } else {
        throw ValidationError("example", "unknown id '" + id + "' (known: 1.3, 2.1, 2.2, 2.3, 2.4, 2.5, 2.6, 2.8, 2.9)");
    }
    return run_jobs(jobs, p != 0 ? std::max(p, opts.pmax) : opts.pmax);
}

}  // namespace orbitlab
