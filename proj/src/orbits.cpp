#include "orbitlab/orbits.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <unordered_map>

namespace orbitlab {

namespace {

RatFunc embed(const RatFunc&, const RatFunc& c) { return c; }
ExtElem embed(const ExtElem& like, const RatFunc& c) { return ExtElem(like.ring(), c); }

// Keys of gamma, f(gamma), ... up to cap, stopping early at the first revisit.
struct OrbitPrefix {
    std::vector<std::string> keys;
    std::uint64_t start = 0;
    std::uint64_t period = 0;  // 0 while no revisit was seen

    std::uint64_t canonical(std::uint64_t m) const {
        if (period == 0 || m < keys.size()) return m;
        return start + (m - start) % period;
    }
};

template <class C>
OrbitPrefix orbit_prefix(const DynPoly<C>& f, const C& gamma, std::uint64_t cap) {
    OrbitPrefix out;
    std::unordered_map<std::string, std::uint64_t> seen;
    C cur = gamma;
    for (std::uint64_t i = 0; i <= cap; ++i) {
        std::string k = cur.key();
        auto it = seen.find(k);
        if (it != seen.end()) {
            out.start = it->second;
            out.period = i - it->second;
            break;
        }
        seen.emplace(k, i);
        out.keys.push_back(std::move(k));
        if (i < cap) cur = f.evaluate(cur);
    }
    return out;
}

void check_degrees(const BigInt& d, const BigInt& e) {
    if (d < 2 || e < 2) fail(ErrorKind::InvalidArgument, "orbit intersection needs degrees >= 2");
}

std::uint64_t to_u64(const BigInt& v) {
    if (v > BigInt(UINT64_MAX)) fail(ErrorKind::InvalidArgument, "degree does not fit in 64 bits");
    return static_cast<std::uint64_t>(v);
}

}  // namespace

std::vector<std::uint64_t> generate(const ReturnModel& model, std::uint64_t cap) {
    std::set<std::uint64_t> out;
    for (auto v : model.finite)
        if (v <= cap) out.insert(v);
    for (const auto& ap : model.progressions) {
        if (ap.a == 0) {
            if (ap.b <= cap) out.insert(ap.b);
            continue;
        }
        for (std::uint64_t v = ap.b; v <= cap; v += ap.a) out.insert(v);
    }
    for (const auto& ps : model.psets) {
        BigRational q(big_pow(BigInt(ps.p), ps.r)), scale = 1;
        while (true) {
            BigRational v = ps.a * scale + ps.b;
            if (v > cap) break;
            if (boost::multiprecision::denominator(v) != 1)
                fail(ErrorKind::InvalidArgument, "p-set member is not an integer");
            if (v >= 0) out.insert(static_cast<std::uint64_t>(boost::multiprecision::numerator(v)));
            if (ps.a <= 0) break;
            scale *= q;
        }
    }
    return {out.begin(), out.end()};
}

ReturnModel fit_return_model(std::vector<std::uint64_t> data, std::uint64_t p, std::uint64_t cap) {
    std::sort(data.begin(), data.end());
    data.erase(std::unique(data.begin(), data.end()), data.end());
    while (!data.empty() && data.back() > cap) data.pop_back();
    std::set<std::uint64_t> present(data.begin(), data.end()), covered;
    ReturnModel model;

    auto uncovered = [&] {
        std::vector<std::uint64_t> out;
        for (auto v : data)
            if (!covered.count(v)) out.push_back(v);
        return out;
    };

    for (auto seed : uncovered()) {
        if (covered.count(seed)) continue;
        for (std::uint64_t a = 1; seed + 3 * a <= cap; ++a) {
            bool ok = true;
            for (std::uint64_t v = seed; v <= cap; v += a)
                if (!present.count(v)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            model.progressions.push_back({a, seed});
            for (std::uint64_t v = seed; v <= cap; v += a) covered.insert(v);
            break;
        }
    }

    for (auto x0 : uncovered()) {
        if (covered.count(x0)) continue;
        bool found = false;
        for (std::uint64_t r = 1, q = p; !found && q <= cap; ++r) {
            for (auto x1 : data) {
                if (x1 <= x0) continue;
                // x_{k+1} = x_k + q^k (x1 - x0)
                std::vector<std::uint64_t> members{x0};
                BigInt step = x1 - x0, cur = x0;
                bool ok = true;
                while (true) {
                    cur += step;
                    if (cur > cap) break;
                    auto v = static_cast<std::uint64_t>(cur);
                    if (!present.count(v)) {
                        ok = false;
                        break;
                    }
                    members.push_back(v);
                    step *= q;
                }
                if (!ok || members.size() < 3) continue;
                BigRational a = BigRational(BigInt(x1 - x0)) / BigRational(BigInt(q - 1));
                model.psets.push_back({a, BigRational(BigInt(x0)) - a, p, r});
                for (auto v : members) covered.insert(v);
                found = true;
                break;
            }
            if (q > cap / p) break;
            q *= p;
        }
    }

    model.finite = uncovered();
    return model;
}

PlaneCurve PlaneCurve::diagonal(const FieldPtr& field) {
    PlaneCurve c;
    c.terms.push_back({BigInt(1), BigInt(0), RatFunc::constant(field, 1)});
    c.terms.push_back({BigInt(0), BigInt(1), RatFunc::from_int(field, -1)});
    return c;
}

template <class C>
C PlaneCurve::evaluate(const C& x1, const C& x2) const {
    C acc = x1.zero_like();
    for (const auto& t : terms) acc += embed(x1, t.coef) * x1.pow(t.e1) * x2.pow(t.e2);
    return acc;
}

std::string PlaneCurve::str() const {
    std::vector<const Term*> order;
    for (const auto& t : terms)
        if (!t.coef.is_zero()) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](const Term* a, const Term* b) {
        return a->e1 != b->e1 ? a->e1 > b->e1 : a->e2 > b->e2;
    });
    if (order.empty()) return "0";
    std::string out;
    for (const Term* t : order) {
        if (!out.empty()) out += " + ";
        std::vector<std::string> parts;
        std::string c = t->coef.str();
        bool constant = t->e1 == 0 && t->e2 == 0;
        bool compound = c.find(' ') != std::string::npos || c.find('/') != std::string::npos;
        if (constant) parts.push_back(c);
        else if (!t->coef.is_one()) parts.push_back(compound ? "(" + c + ")" : c);
        if (t->e1 > 0) parts.push_back(t->e1 == 1 ? "x1" : "x1^" + t->e1.str());
        if (t->e2 > 0) parts.push_back(t->e2 == 1 ? "x2" : "x2^" + t->e2.str());
        for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "*" : "") + parts[i];
    }
    return out;
}

const char* verdict_name(ApVerdict v) {
    switch (v) {
        case ApVerdict::Confirmed: return "confirmed";
        case ApVerdict::RefutedData: return "refuted-data";
        case ApVerdict::RefutedIterate: return "refuted-iterate";
    }
    return "unknown";
}

template <class C>
ReturnSet intersect_orbits(const DynPoly<C>& f, const C& alpha, const DynPoly<C>& g, const C& beta,
                           std::uint64_t cap_m, std::uint64_t cap_n, const std::optional<Pruning>& pruning) {
    check_degrees(f.degree(), g.degree());
    auto other = std::async(std::launch::async, [&] { return orbit_prefix(g, beta, cap_n); });
    OrbitPrefix of = orbit_prefix(f, alpha, cap_m);
    OrbitPrefix og = other.get();

    ReturnSet out;
    out.cap_m = cap_m;
    out.cap_n = cap_n;
    if (pruning) {
        auto cands = pruned_candidates(pruning->u1, pruning->u2, to_u64(f.degree()), to_u64(g.degree()), pruning->c,
                                       cap_m, cap_n);
        for (const auto& [m, n] : cands)
            if (of.keys[of.canonical(m)] == og.keys[og.canonical(n)]) out.pairs.emplace_back(m, n);
        return out;
    }
    std::unordered_map<std::string, std::uint64_t> gindex;
    for (std::uint64_t j = 0; j < og.keys.size(); ++j) gindex.emplace(og.keys[j], j);
    for (std::uint64_t m = 0; m <= cap_m; ++m) {
        auto it = gindex.find(of.keys[of.canonical(m)]);
        if (it == gindex.end()) continue;
        std::uint64_t j = it->second;
        if (og.period == 0 || j < og.start) {
            out.pairs.emplace_back(m, j);
        } else {
            for (std::uint64_t n = j; n <= cap_n; n += og.period) out.pairs.emplace_back(m, n);
        }
    }
    return out;
}

template <class C>
std::vector<std::uint64_t> synchronized_collisions(const DynPoly<C>& f, const C& alpha, const DynPoly<C>& g,
                                                   const C& beta, std::uint64_t r, std::uint64_t s, std::uint64_t a,
                                                   std::uint64_t b, std::uint64_t cap_n) {
    if (r < 1 || s < 1) fail(ErrorKind::InvalidArgument, "r and s must be positive");
    C x = orbit_element(f, alpha, a), y = orbit_element(g, beta, b);
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 0; n <= cap_n; ++n) {
        if (x == y) out.push_back(n);
        if (n == cap_n) break;
        x = orbit_element(f, x, r);
        y = orbit_element(g, y, s);
    }
    return out;
}

template <class C>
std::optional<SameDegreeData<C>> reduce_to_same_degree(const DynPoly<C>& f, const C& alpha, const DynPoly<C>& g,
                                                        const C& beta, std::uint64_t cap_m, std::uint64_t cap_n,
                                                        const Budget& budget) {
    check_degrees(f.degree(), g.degree());
    auto dep = multiplicative_dependence(to_u64(f.degree()), to_u64(g.degree()));
    if (!dep) return std::nullopt;
    auto [r, s] = *dep;
    ReturnSet rs = intersect_orbits(f, alpha, g, beta, cap_m, cap_n);
    SameDegreeData<C> out{iterate(f, r, budget), iterate(g, s, budget), alpha, beta, r, s, 0, 0, std::nullopt};
    if (!rs.pairs.empty()) {
        auto [m0, n0] = rs.pairs.front();
        std::uint64_t k0 = std::min(m0 / r, n0 / s);
        out.a = m0 - k0 * r;
        out.b = n0 - k0 * s;
        out.first_collision = rs.pairs.front();
    }
    out.alpha1 = orbit_element(f, alpha, out.a);
    out.beta1 = orbit_element(g, beta, out.b);
    return out;
}

template <class C>
std::vector<std::uint64_t> curve_return_set(const DynPoly<C>& f, const DynPoly<C>& g, const C& x, const C& y,
                                            const PlaneCurve& curve, std::uint64_t cap_n) {
    std::vector<std::uint64_t> out;
    C a = x, b = y;
    for (std::uint64_t n = 0; n <= cap_n; ++n) {
        if (curve.evaluate(a, b).is_zero()) out.push_back(n);
        if (n == cap_n) break;
        a = f.evaluate(a);
        b = g.evaluate(b);
    }
    return out;
}

template <class C>
ApVerdict ap_implies_common_iterate(const DynPoly<C>& f, const DynPoly<C>& g, std::uint64_t a, std::uint64_t b,
                                    const C& alpha, const C& beta, std::uint64_t cap_n, const Budget& budget) {
    if (a < 1) fail(ErrorKind::InvalidArgument, "progression step must be positive");
    C x = orbit_element(f, alpha, b), y = orbit_element(g, beta, b);
    for (std::uint64_t n = 0; n <= cap_n; ++n) {
        if (x != y) return ApVerdict::RefutedData;
        if (n == cap_n) break;
        x = orbit_element(f, x, a);
        y = orbit_element(g, y, a);
    }
    return iterate(f, a, budget) == iterate(g, a, budget) ? ApVerdict::Confirmed : ApVerdict::RefutedIterate;
}

template <class C>
std::optional<Preperiodic> detect_preperiodic(const DynPoly<C>& f, const C& gamma, std::uint64_t max_steps) {
    OrbitPrefix o = orbit_prefix(f, gamma, max_steps);
    if (o.period == 0) return std::nullopt;
    return Preperiodic{o.start, o.period};
}

#define ORBITLAB_INSTANTIATE(C)                                                                                  \
    template C PlaneCurve::evaluate(const C&, const C&) const;                                                  \
    template ReturnSet intersect_orbits(const DynPoly<C>&, const C&, const DynPoly<C>&, const C&, std::uint64_t, \
                                        std::uint64_t, const std::optional<Pruning>&);                          \
    template std::vector<std::uint64_t> synchronized_collisions(const DynPoly<C>&, const C&, const DynPoly<C>&, \
                                                                const C&, std::uint64_t, std::uint64_t,          \
                                                                std::uint64_t, std::uint64_t, std::uint64_t);    \
    template std::optional<SameDegreeData<C>> reduce_to_same_degree(                                            \
        const DynPoly<C>&, const C&, const DynPoly<C>&, const C&, std::uint64_t, std::uint64_t, const Budget&); \
    template std::vector<std::uint64_t> curve_return_set(const DynPoly<C>&, const DynPoly<C>&, const C&,        \
                                                         const C&, const PlaneCurve&, std::uint64_t);            \
    template ApVerdict ap_implies_common_iterate(const DynPoly<C>&, const DynPoly<C>&, std::uint64_t,           \
                                                 std::uint64_t, const C&, const C&, std::uint64_t,              \
                                                 const Budget&);                                                 \
    template std::optional<Preperiodic> detect_preperiodic(const DynPoly<C>&, const C&, std::uint64_t);

ORBITLAB_INSTANTIATE(RatFunc)
ORBITLAB_INSTANTIATE(ExtElem)

#undef ORBITLAB_INSTANTIATE

}  // namespace orbitlab
