#include "orbitlab/parse.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>

namespace orbitlab {

namespace {

// ---------------------------------------------------------------- syntax tree

struct Node {
    enum class Kind { Num, Sym, Sum, Prod, Pow, Neg };
    Kind kind = Kind::Num;
    std::size_t pos = 0;
    BigInt num;       // literal value or exponent
    std::string sym;  // symbol name
    std::vector<Node> kids;
    std::vector<bool> inv;  // Sum: subtract; Prod: divide
};

constexpr std::size_t kMaxLiteralDigits = 4096;

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    Node parse() {
        skip();
        if (i_ >= s_.size()) error("unexpected end of input");
        Node n = expr();
        skip();
        if (i_ < s_.size()) error(std::string("unexpected character '") + s_[i_] + "'");
        return n;
    }

    // Symbols in order of first appearance with their positions.
    std::vector<std::pair<std::string, std::size_t>> symbols;

private:
    [[noreturn]] void error(const std::string& msg) const { throw SyntaxError(ErrorKind::SyntaxError, i_, msg); }

    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }

    bool accept(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }

    void enter() {
        if (++depth_ > kMaxParseDepth) error("expression nested too deeply");
    }

    Node expr() {
        Node sum;
        sum.kind = Node::Kind::Sum;
        sum.pos = i_;
        sum.kids.push_back(term());
        sum.inv.push_back(false);
        while (true) {
            skip();
            if (i_ >= s_.size() || (s_[i_] != '+' && s_[i_] != '-')) break;
            bool minus = s_[i_++] == '-';
            sum.kids.push_back(term());
            sum.inv.push_back(minus);
        }
        if (sum.kids.size() == 1) return std::move(sum.kids[0]);
        return sum;
    }

    Node term() {
        Node prod;
        prod.kind = Node::Kind::Prod;
        skip();
        prod.pos = i_;
        prod.kids.push_back(unary());
        prod.inv.push_back(false);
        while (true) {
            skip();
            if (i_ >= s_.size() || (s_[i_] != '*' && s_[i_] != '/')) break;
            bool div = s_[i_++] == '/';
            prod.kids.push_back(unary());
            prod.inv.push_back(div);
        }
        if (prod.kids.size() == 1) return std::move(prod.kids[0]);
        return prod;
    }

    Node unary() {
        skip();
        if (i_ < s_.size() && s_[i_] == '-') {
            Node n;
            n.kind = Node::Kind::Neg;
            n.pos = i_++;
            enter();
            n.kids.push_back(unary());
            --depth_;
            return n;
        }
        return factor();
    }

    BigInt literal() {
        std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (i_ - start > kMaxLiteralDigits) {
            i_ = start;
            error("integer literal too long");
        }
        return from_decimal(s_.substr(start, i_ - start));
    }

    Node factor() {
        Node base = atom();
        const std::size_t saved = depth_;
        while (true) {
            skip();
            if (i_ >= s_.size() || s_[i_] != '^') break;
            enter();
            std::size_t pos = i_++;
            skip();
            if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_])))
                error("expected a non-negative integer exponent");
            Node p;
            p.kind = Node::Kind::Pow;
            p.pos = pos;
            p.num = literal();
            p.kids.push_back(std::move(base));
            base = std::move(p);
        }
        depth_ = saved;
        return base;
    }

    Node atom() {
        skip();
        if (i_ >= s_.size()) error("unexpected end of input");
        Node n;
        n.pos = i_;
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            n.kind = Node::Kind::Num;
            n.num = literal();
            return n;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = i_;
            while (i_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[i_]))) ++i_;
            n.kind = Node::Kind::Sym;
            n.sym = s_.substr(start, i_ - start);
            symbols.emplace_back(n.sym, start);
            return n;
        }
        if (c == '(') {
            ++i_;
            enter();
            Node inner = expr();
            --depth_;
            if (!accept(')')) error("expected ')'");
            return inner;
        }
        error(std::string("unexpected character '") + c + "'");
    }

    const std::string& s_;
    std::size_t i_ = 0;
    std::size_t depth_ = 0;
};

struct Parsed {
    Node root;
    std::vector<std::pair<std::string, std::size_t>> symbols;

    bool uses(const std::string& name) const {
        return std::any_of(symbols.begin(), symbols.end(), [&](const auto& s) { return s.first == name; });
    }
};

Parsed parse_tree(const std::string& text) {
    Parser p(text);
    Node root = p.parse();
    Parsed out{std::move(root), std::move(p.symbols)};
    std::size_t xpos = 0, tpos = 0;
    bool hx = false, ht = false;
    for (const auto& [name, pos] : out.symbols) {
        if (name == "x" && !hx) hx = true, xpos = pos;
        if (name == "T" && !ht) ht = true, tpos = pos;
    }
    if (hx && ht) throw SyntaxError(ErrorKind::MixedVariables, std::max(xpos, tpos), "x and T in one expression");
    return out;
}

[[noreturn]] void undefined(const std::string& name, std::size_t pos) {
    throw SyntaxError(ErrorKind::UndefinedSymbol, pos, "undefined symbol '" + name + "'");
}

// Rough term count of a power of a polynomial with `terms` terms, using the base-p digit split.
void guard_power(std::size_t terms, const BigInt& e, std::uint64_t p, std::size_t pos) {
    if (terms <= 1 || e <= 1) return;
    double est = 1;
    for (auto d : base_digits(e, p)) {
        double c = 1;
        for (std::uint64_t k = 1; k <= d && c < 1e12; ++k)
            c = c * static_cast<double>(terms - 1 + k) / static_cast<double>(k);
        est *= c;
        if (est > double(1 << 20)) break;
    }
    if (est > double(1 << 20))
        throw SyntaxError(ErrorKind::DegreeBudgetExceeded, pos, "power expands to too many terms");
}

std::size_t term_count(const RatFunc& c) { return std::max(c.num().size(), c.den().size()); }
std::size_t term_count(const ExtElem& c) {
    std::size_t n = 0;
    for (const auto& x : c.coeffs()) n += term_count(x);
    return n;
}

// ------------------------------------------------------------- evaluation

template <class Alg>
typename Alg::V eval(const Node& n, Alg& alg) {
    using V = typename Alg::V;
    switch (n.kind) {
        case Node::Kind::Num: return alg.integer(n.num);
        case Node::Kind::Sym: return alg.symbol(n.sym, n.pos);
        case Node::Kind::Neg: return alg.neg(eval(n.kids[0], alg));
        case Node::Kind::Pow: return alg.pow(eval(n.kids[0], alg), n.num, n.pos);
        case Node::Kind::Sum: {
            V acc = eval(n.kids[0], alg);
            for (std::size_t i = 1; i < n.kids.size(); ++i) {
                V rhs = eval(n.kids[i], alg);
                acc = n.inv[i] ? alg.sub(acc, rhs) : alg.add(acc, rhs);
            }
            return acc;
        }
        case Node::Kind::Prod: {
            V acc = eval(n.kids[0], alg);
            for (std::size_t i = 1; i < n.kids.size(); ++i) {
                V rhs = eval(n.kids[i], alg);
                acc = n.inv[i] ? alg.div(acc, rhs, n.kids[i].pos) : alg.mul(acc, rhs);
            }
            return acc;
        }
    }
    return alg.integer(0);
}

RatFunc embed_base(const RatFunc&, const RatFunc& c) { return c; }
ExtElem embed_base(const ExtElem& like, const RatFunc& c) { return ExtElem(like.ring(), c); }

// Constants: elements of K (C = RatFunc) or of the extension ring (C = ExtElem).
template <class C>
struct ConstAlg {
    using V = C;
    C zero;
    FieldPtr field;
    // Symbol used for a polynomial variable by a wrapping algebra, if any.
    std::string reserved;

    V integer(const BigInt& v) const { return embed_base(zero, RatFunc::constant(field, field->from_big(v))); }

    V symbol(const std::string& name, std::size_t pos) const {
        if (name == "t") return embed_base(zero, RatFunc::t(field));
        if (name == "w" && field->degree() > 1) return embed_base(zero, RatFunc::constant(field, field->gen_code()));
        if constexpr (std::is_same_v<C, ExtElem>) {
            if (name == std::string(1, zero.ring()->generator()) && name != reserved)
                return ExtElem::generator(zero.ring());
        }
        undefined(name, pos);
    }

    V add(const V& a, const V& b) const { return a + b; }
    V sub(const V& a, const V& b) const { return a - b; }
    V mul(const V& a, const V& b) const { return a * b; }
    V neg(const V& a) const { return -a; }
    V div(const V& a, const V& b, std::size_t pos) const {
        if (b.is_zero()) throw SyntaxError(ErrorKind::DivisionByZero, pos, "division by zero");
        return a / b;
    }
    V pow(const V& a, const BigInt& e, std::size_t pos) const {
        guard_power(term_count(a), e, field->characteristic(), pos);
        if constexpr (std::is_same_v<C, ExtElem>) {
            if (!a.in_base() && e > BigInt(1) << 64)
                throw SyntaxError(ErrorKind::DegreeBudgetExceeded, pos, "exponent too large for an extension element");
        }
        return a.pow(e);
    }
};

// Polynomials in one variable over C; the variable prints as x but may be named differently in the input.
template <class C>
struct DynAlg {
    using V = DynPoly<C>;
    ConstAlg<C> k;
    std::string var = "x";

    V integer(const BigInt& v) const { return V::constant(k.integer(v)); }
    V symbol(const std::string& name, std::size_t pos) const {
        if (name == var) return V::x(k.zero);
        return V::constant(k.symbol(name, pos));
    }
    V add(const V& a, const V& b) const { return a + b; }
    V sub(const V& a, const V& b) const { return a - b; }
    V mul(const V& a, const V& b) const { return a * b; }
    V neg(const V& a) const { return -a; }
    V div(const V& a, const V& b, std::size_t pos) const {
        if (b.is_zero()) throw SyntaxError(ErrorKind::DivisionByZero, pos, "division by zero");
        if (b.degree() > 0) throw SyntaxError(ErrorKind::SyntaxError, pos, "division by a non-constant polynomial");
        return a.scaled(k.zero.one_like() / b.coefficient(0));
    }
    V pow(const V& a, const BigInt& e, std::size_t pos) const {
        if (a.size() <= 1 && a.degree() == 0) return V::constant(k.pow(a.leading(), e, pos));
        guard_power(a.size(), e, k.field->characteristic(), pos);
        if (a.size() == 1) guard_power(term_count(a.leading()), e, k.field->characteristic(), pos);
        return a.pow(e);
    }
};

template <class C>
struct TwistedAlg {
    using V = TwistedPoly<C>;
    ConstAlg<C> k;
    Budget budget;

    V integer(const BigInt& v) const { return V(k.zero, {k.integer(v)}); }
    V symbol(const std::string& name, std::size_t pos) const {
        if (name == "T") return V::monomial(k.zero.one_like(), 1);
        return V(k.zero, {k.symbol(name, pos)});
    }
    V add(const V& a, const V& b) const { return a + b; }
    V sub(const V& a, const V& b) const { return a - b; }
    V mul(const V& a, const V& b) const { return twisted_mul(a, b, budget); }
    V neg(const V& a) const { return V(k.zero) - a; }
    V div(const V& a, const V& b, std::size_t pos) const {
        if (b.is_zero()) throw SyntaxError(ErrorKind::DivisionByZero, pos, "division by zero");
        if (b.degree() > 0) throw SyntaxError(ErrorKind::SyntaxError, pos, "division by a non-constant twisted polynomial");
        return twisted_mul(a, V(k.zero, {k.zero.one_like() / b.coeff(0)}), budget);
    }
    V pow(const V& a, const BigInt& e, std::size_t pos) const {
        if (a.degree() <= 0) return V(k.zero, {k.pow(a.coeff(0), e, pos)});
        return twisted_pow(a, e, budget);
    }
};

// Bivariate polynomials in x1, x2 over K.
struct Biv {
    std::map<std::pair<BigInt, BigInt>, RatFunc> terms;
};

struct CurveAlg {
    using V = Biv;
    ConstAlg<RatFunc> k;

    static void clean(Biv& b) {
        for (auto it = b.terms.begin(); it != b.terms.end();)
            it = it->second.is_zero() ? b.terms.erase(it) : std::next(it);
    }
    V constant(const RatFunc& c) const {
        Biv b;
        if (!c.is_zero()) b.terms.emplace(std::make_pair(BigInt(0), BigInt(0)), c);
        return b;
    }
    V integer(const BigInt& v) const { return constant(k.integer(v)); }
    V symbol(const std::string& name, std::size_t pos) const {
        Biv b;
        if (name == "x1") b.terms.emplace(std::make_pair(BigInt(1), BigInt(0)), k.zero.one_like());
        else if (name == "x2") b.terms.emplace(std::make_pair(BigInt(0), BigInt(1)), k.zero.one_like());
        else return constant(k.symbol(name, pos));
        return b;
    }
    V add(const V& a, const V& b) const {
        Biv out = a;
        for (const auto& [e, c] : b.terms) {
            auto it = out.terms.find(e);
            if (it == out.terms.end()) out.terms.emplace(e, c);
            else it->second += c;
        }
        clean(out);
        return out;
    }
    V neg(const V& a) const {
        Biv out = a;
        for (auto& [e, c] : out.terms) c = -c;
        return out;
    }
    V sub(const V& a, const V& b) const { return add(a, neg(b)); }
    V mul(const V& a, const V& b) const {
        Biv out;
        for (const auto& [ea, ca] : a.terms)
            for (const auto& [eb, cb] : b.terms) {
                auto e = std::make_pair(ea.first + eb.first, ea.second + eb.second);
                auto it = out.terms.find(e);
                if (it == out.terms.end()) out.terms.emplace(e, ca * cb);
                else it->second += ca * cb;
            }
        clean(out);
        return out;
    }
    V div(const V& a, const V& b, std::size_t pos) const {
        if (b.terms.empty()) throw SyntaxError(ErrorKind::DivisionByZero, pos, "division by zero");
        if (b.terms.size() != 1 || b.terms.begin()->first != std::make_pair(BigInt(0), BigInt(0)))
            throw SyntaxError(ErrorKind::SyntaxError, pos, "division by a non-constant polynomial");
        return mul(a, constant(k.zero.one_like() / b.terms.begin()->second));
    }
    V pow(const V& a, const BigInt& e, std::size_t pos) const {
        if (a.terms.size() == 1) {
            const auto& [ex, c] = *a.terms.begin();
            Biv out;
            RatFunc cp = k.pow(c, e, pos);
            if (!cp.is_zero()) out.terms.emplace(std::make_pair(ex.first * e, ex.second * e), cp);
            return out;
        }
        guard_power(a.terms.size(), e, k.field->characteristic(), pos);
        if (e > 4096) throw SyntaxError(ErrorKind::DegreeBudgetExceeded, pos, "exponent too large");
        Biv acc = constant(k.zero.one_like()), base = a;
        for (auto n = static_cast<std::uint64_t>(e); n; n >>= 1U) {
            if (n & 1U) acc = mul(acc, base);
            if (n > 1) base = mul(base, base);
        }
        return acc;
    }
};

// Polynomials in w over the prime field, for field moduli.
struct WAlg {
    using V = FFPoly;
    FieldPtr prime;

    V integer(const BigInt& v) const { return FFPoly::constant(prime, prime->from_big(v)); }
    V symbol(const std::string& name, std::size_t pos) const {
        if (name == "w") return FFPoly::variable(prime);
        undefined(name, pos);
    }
    V add(const V& a, const V& b) const { return a + b; }
    V sub(const V& a, const V& b) const { return a - b; }
    V mul(const V& a, const V& b) const { return a * b; }
    V neg(const V& a) const { return -a; }
    V div(const V& a, const V& b, std::size_t pos) const {
        if (!b.is_constant() || b.is_zero())
            throw SyntaxError(ErrorKind::SyntaxError, pos, "division in a modulus must be by a nonzero constant");
        return a.scaled(prime->inv(b.constant_term()));
    }
    V pow(const V& a, const BigInt& e, std::size_t pos) const {
        guard_power(a.size(), e, prime->characteristic(), pos);
        if (e > 64) throw SyntaxError(ErrorKind::SyntaxError, pos, "modulus exponent too large");
        return a.pow(e);
    }
};

template <class C>
ConstAlg<C> const_alg(const C& zero, std::string reserved = {}) {
    return ConstAlg<C>{zero, zero.field(), std::move(reserved)};
}

void reject(const Parsed& p, const std::set<std::string>& banned) {
    for (const auto& [name, pos] : p.symbols)
        if (banned.count(name)) undefined(name, pos);
}

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

bool irreducible(const FFPoly& m) {
    const FieldPtr& f = m.field();
    const std::uint64_t p = f->characteristic();
    auto r = static_cast<unsigned>(m.degree());
    for (unsigned d = 1; 2 * d <= r; ++d) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::vector<FFPoly::Term> terms;
            std::uint64_t v = idx;
            for (unsigned i = 0; i < d; ++i, v /= p)
                if (v % p) terms.push_back({BigInt(i), v % p});
            terms.push_back({BigInt(d), 1});
            if (m.rem(FFPoly::from_terms(f, std::move(terms))).is_zero()) return false;
        }
    }
    return true;
}

}  // namespace

// ------------------------------------------------------------ public parsing

FieldPtr parse_field_spec(const std::string& text) {
    std::string s = trim(text);
    auto bad = [&](std::size_t pos, const std::string& msg) -> SyntaxError {
        return SyntaxError(ErrorKind::SyntaxError, pos, msg);
    };
    if (s.size() < 4 || s.compare(0, 3, "GF(") != 0 || s.back() != ')') throw bad(0, "expected GF(...)");
    std::string inner = s.substr(3, s.size() - 4);
    std::string order = inner, mod;
    auto semi = inner.find(';');
    if (semi != std::string::npos) {
        order = inner.substr(0, semi);
        std::string rest = trim(inner.substr(semi + 1));
        if (rest.compare(0, 3, "mod") != 0) throw bad(3 + semi + 1, "expected mod=...");
        rest = trim(rest.substr(3));
        if (rest.empty() || rest[0] != '=') throw bad(3 + semi + 1, "expected mod=...");
        mod = trim(rest.substr(1));
    }
    order = trim(order);
    std::uint64_t p = 0, r = 1;
    try {
        auto caret = order.find('^');
        std::size_t used = 0;
        if (caret != std::string::npos) {
            p = std::stoull(order.substr(0, caret), &used);
            if (used != trim(order.substr(0, caret)).size()) throw std::invalid_argument("p");
            r = std::stoull(order.substr(caret + 1), &used);
            if (used != order.size() - caret - 1) throw std::invalid_argument("r");
        } else {
            std::uint64_t q = std::stoull(order, &used);
            if (used != order.size()) throw std::invalid_argument("q");
            auto fac = factorize(q);
            if (fac.size() != 1) throw ValidationError("field", "order " + order + " is not a prime power");
            p = fac[0].first;
            r = fac[0].second;
        }
    } catch (const std::logic_error&) {
        throw bad(3, "malformed field order '" + order + "'");
    }
    if (!is_prime(p)) throw ValidationError("field", std::to_string(p) + " is not prime");
    if (r == 0 || r > 31) throw ValidationError("field", "unsupported extension degree");
    {
        BigInt q = big_pow(BigInt(p), r);
        if (q >= BigInt(1) << 32) throw ValidationError("field", "field order must be below 2^32");
    }
    FieldPtr prime = FiniteField::prime(p);
    if (r == 1 && mod.empty()) return prime;
    FFPoly m(prime);
    if (!mod.empty()) {
        Parsed tree = parse_tree(mod);
        WAlg alg{prime};
        m = eval(tree.root, alg).monic();
        if (m.degree() != BigInt(r))
            throw ValidationError("field", "modulus degree " + m.degree().str() + " does not match r = " + std::to_string(r));
        if (!irreducible(m)) throw ValidationError("field", "modulus " + m.str('w') + " is reducible");
    } else {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < r; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::vector<FFPoly::Term> terms;
            std::uint64_t v = idx;
            for (unsigned i = 0; i < r; ++i, v /= p)
                if (v % p) terms.push_back({BigInt(i), v % p});
            terms.push_back({BigInt(r), 1});
            FFPoly cand = FFPoly::from_terms(prime, std::move(terms));
            if (irreducible(cand)) {
                m = cand;
                break;
            }
        }
    }
    if (r == 1) return prime;
    std::vector<std::uint64_t> coeffs(r + 1, 0);
    for (const auto& t : m.terms()) coeffs[static_cast<std::size_t>(t.exp)] = t.coef;
    return FiniteField::extension(p, coeffs);
}

ExtPtr parse_ext_spec(const std::string& text, const FieldPtr& field) {
    Parsed tree = parse_tree(text);
    reject(tree, {"x", "T", "x1", "x2"});
    DynAlg<RatFunc> alg{const_alg(RatFunc(field), "y"), "y"};
    KDynPoly m = eval(tree.root, alg);
    if (m.degree() < 1) throw ValidationError("ext", "extension modulus must have degree >= 1 in y");
    if (m.degree() > 4096) throw ValidationError("ext", "extension degree too large");
    return ExtRing::create(to_kpoly(m));
}

RatFunc parse_element(const std::string& text, const FieldPtr& field) {
    Parsed tree = parse_tree(text);
    auto alg = const_alg(RatFunc(field));
    return eval(tree.root, alg);
}

FFPoly parse_ffpoly(const std::string& text, const FieldPtr& field) {
    RatFunc v = parse_element(text, field);
    if (!v.is_polynomial()) throw SyntaxError(ErrorKind::SyntaxError, 0, "expected a polynomial in t");
    return v.num();
}

ExtElem parse_ext_element(const std::string& text, const ExtPtr& ext) {
    Parsed tree = parse_tree(text);
    auto alg = const_alg(ExtElem(ext));
    return eval(tree.root, alg);
}

KDynPoly parse_dynpoly(const std::string& text, const FieldPtr& field) {
    Parsed tree = parse_tree(text);
    DynAlg<RatFunc> alg{const_alg(RatFunc(field))};
    return eval(tree.root, alg);
}

ExtDynPoly parse_dynpoly(const std::string& text, const ExtPtr& ext) {
    Parsed tree = parse_tree(text);
    DynAlg<ExtElem> alg{const_alg(ExtElem(ext))};
    return eval(tree.root, alg);
}

KTwisted parse_twisted(const std::string& text, const FieldPtr& field) {
    Parsed tree = parse_tree(text);
    TwistedAlg<RatFunc> alg{const_alg(RatFunc(field)), Budget{}};
    return eval(tree.root, alg);
}

ExtTwisted parse_twisted(const std::string& text, const ExtPtr& ext) {
    Parsed tree = parse_tree(text);
    TwistedAlg<ExtElem> alg{const_alg(ExtElem(ext)), Budget{}};
    return eval(tree.root, alg);
}

PlaneCurve parse_curve(const std::string& text, const FieldPtr& field) {
    Parsed tree = parse_tree(text);
    reject(tree, {"x", "T"});
    CurveAlg alg{const_alg(RatFunc(field))};
    Biv b = eval(tree.root, alg);
    PlaneCurve c;
    for (auto& [e, coef] : b.terms) c.terms.push_back({e.first, e.second, coef});
    return c;
}

ParsedValue parse_expr(const std::string& text, const ParseContext& ctx) {
    Parsed tree = parse_tree(text);
    reject(tree, {"x1", "x2"});
    const bool ext = ctx.ext && tree.uses(std::string(1, ctx.ext->generator()));
    if (tree.uses("T")) {
        if (ext) {
            TwistedAlg<ExtElem> alg{const_alg(ExtElem(ctx.ext)), ctx.budget};
            return eval(tree.root, alg);
        }
        TwistedAlg<RatFunc> alg{const_alg(RatFunc(ctx.field)), ctx.budget};
        return eval(tree.root, alg);
    }
    if (tree.uses("x")) {
        if (ext) {
            DynAlg<ExtElem> alg{const_alg(ExtElem(ctx.ext))};
            return eval(tree.root, alg);
        }
        DynAlg<RatFunc> alg{const_alg(RatFunc(ctx.field))};
        return eval(tree.root, alg);
    }
    if (ext) {
        auto alg = const_alg(ExtElem(ctx.ext));
        return eval(tree.root, alg);
    }
    auto alg = const_alg(RatFunc(ctx.field));
    RatFunc v = eval(tree.root, alg);
    if (v.is_polynomial()) return v.num();
    return v;
}

std::string print_canonical(const ParsedValue& v) {
    return std::visit(
        [](const auto& x) -> std::string {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, FFPoly>) return x.str('t');
            else return x.str();
        },
        v);
}

// ----------------------------------------------------------------- scenarios

const char* task_name(Task t) {
    switch (t) {
        case Task::Intersect: return "intersect";
        case Task::Synchronized: return "synchronized";
        case Task::CurveReturn: return "curve-return";
        case Task::VerifyExample: return "verify-example";
        case Task::Heights: return "heights";
        case Task::Classify: return "classify";
    }
    return "unknown";
}

namespace {

const std::map<std::string, std::string>& key_aliases() {
    static const std::map<std::string, std::string> aliases = {
        {"field", "field"},
        {"ext", "ext"},
        {"f", "f"},
        {"g", "g"},
        {"alpha", "alpha"},
        {"beta", "beta"},
        {"task", "task"},
        {"capM", "capM"},
        {"cap_m", "capM"},
        {"capN", "capN"},
        {"cap_n", "capN"},
        {"degreeBudget", "degreeBudget"},
        {"degree_budget", "degreeBudget"},
        {"tauBudget", "tauBudget"},
        {"tau_budget", "tauBudget"},
        {"r", "r"},
        {"s", "s"},
        {"a", "a"},
        {"b", "b"},
        {"curve", "curve"},
        {"prune", "prune"},
        {"D", "D"},
        {"example", "example"},
        {"p", "p"},
        {"nmax", "nmax"},
        {"expect", "expect"},
    };
    return aliases;
}

std::uint64_t to_uint(const std::string& key, const std::string& v) {
    if (v.empty() || v.size() > 19 || !std::all_of(v.begin(), v.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ValidationError(key, "expected a non-negative integer, got '" + v + "'");
    return std::stoull(v);
}

// Re-raise a parse error with the scenario key in front.
template <class F>
auto with_key(const std::string& key, F&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const SyntaxError& e) {
        throw SyntaxError(e.kind(), e.position(), key + ": " + e.message());
    } catch (const ValidationError&) {
        throw;
    } catch (const Error& e) {
        throw ValidationError(key, e.what());
    }
}

}  // namespace

Scenario parse_scenario(const std::string& text, const std::string& source) {
    Scenario sc;
    sc.source = source;
    const auto& aliases = key_aliases();

    std::size_t line_start = 0;
    while (line_start <= text.size()) {
        std::size_t line_end = text.find('\n', line_start);
        if (line_end == std::string::npos) line_end = text.size();
        std::string line = text.substr(line_start, line_end - line_start);
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        // split on ';' outside parentheses
        std::size_t depth = 0, piece_start = 0;
        for (std::size_t i = 0; i <= line.size(); ++i) {
            char c = i < line.size() ? line[i] : ';';
            if (c == '(') ++depth;
            if (c == ')' && depth > 0) --depth;
            if (c != ';' || depth > 0) continue;
            std::string piece = line.substr(piece_start, i - piece_start);
            std::size_t offset = line_start + piece_start;
            piece_start = i + 1;
            if (trim(piece).empty()) continue;
            auto eq = piece.find('=');
            if (eq == std::string::npos)
                throw SyntaxError(ErrorKind::SyntaxError, offset, "expected 'key = value'");
            std::string key = trim(piece.substr(0, eq)), value = trim(piece.substr(eq + 1));
            auto it = aliases.find(key);
            if (it == aliases.end()) throw ValidationError(key, "unknown key");
            if (sc.entries.count(it->second)) throw ValidationError(it->second, "duplicate key");
            if (value.empty()) throw ValidationError(it->second, "empty value");
            sc.entries.emplace(it->second, value);
        }
        line_start = line_end + 1;
    }

    auto has = [&](const std::string& k) { return sc.entries.count(k) > 0; };
    auto get = [&](const std::string& k) -> const std::string& { return sc.entries.at(k); };
    auto require = [&](const std::string& k) -> const std::string& {
        if (!has(k)) throw ValidationError(k, "missing required entry");
        return get(k);
    };

    if (has("task")) {
        const std::string& t = get("task");
        static const std::map<std::string, Task> names = {
            {"intersect", Task::Intersect},         {"synchronized", Task::Synchronized},
            {"curve-return", Task::CurveReturn},    {"verify-example", Task::VerifyExample},
            {"heights", Task::Heights},             {"classify", Task::Classify},
        };
        auto it = names.find(t);
        if (it == names.end()) throw ValidationError("task", "unknown task '" + t + "'");
        sc.task = it->second;
    } else if (has("example")) {
        sc.task = Task::VerifyExample;
    } else {
        throw ValidationError("task", "missing required entry");
    }

    if (has("capM")) sc.cap_m = to_uint("capM", get("capM"));
    if (has("capN")) sc.cap_n = to_uint("capN", get("capN"));
    if (has("degreeBudget")) sc.budget.degree_budget = to_uint("degreeBudget", get("degreeBudget"));
    if (has("tauBudget")) sc.budget.tau_budget = to_uint("tauBudget", get("tauBudget"));
    if (has("r")) sc.r = to_uint("r", get("r"));
    if (has("s")) sc.s = to_uint("s", get("s"));
    if (has("a")) sc.a = to_uint("a", get("a"));
    if (has("b")) sc.b = to_uint("b", get("b"));
    if (has("D")) {
        sc.denominator_bound = to_uint("D", get("D"));
        if (sc.denominator_bound < 1) throw ValidationError("D", "must be positive");
    }
    if (has("nmax")) sc.nmax = to_uint("nmax", get("nmax"));
    if (has("p")) sc.p = to_uint("p", get("p"));
    if (has("expect")) sc.expect = get("expect");
    if (has("example")) sc.example = get("example");
    if (has("prune")) {
        const std::string& v = get("prune");
        if (v == "true" || v == "yes" || v == "1") sc.prune = true;
        else if (v == "false" || v == "no" || v == "0") sc.prune = false;
        else throw ValidationError("prune", "expected true or false");
    }
    if (sc.r < 1) throw ValidationError("r", "must be positive");
    if (sc.s < 1) throw ValidationError("s", "must be positive");

    if (sc.task == Task::VerifyExample) {
        if (sc.example.empty()) throw ValidationError("example", "missing required entry");
        if (has("p") && !is_prime(sc.p)) throw ValidationError("p", "not a prime");
        if (has("field")) sc.field = with_key("field", [&] { return parse_field_spec(get("field")); });
        return sc;
    }

    sc.field = with_key("field", [&] { return parse_field_spec(require("field")); });
    if (has("ext")) sc.ext = with_key("ext", [&] { return parse_ext_spec(get("ext"), sc.field); });
    if (sc.ext) {
        const char y = sc.ext->generator();
        for (const char* k : {"f", "g", "alpha", "beta"})
            if (has(k) && get(k).find(y) != std::string::npos) sc.over_ext = true;
    }

    auto load_map = [&](const std::string& key, std::optional<KDynPoly>& kval, std::optional<ExtDynPoly>& eval_,
                        bool& twisted) {
        if (!has(key)) return;
        const std::string& v = get(key);
        twisted = v.find('T') != std::string::npos;
        with_key(key, [&] {
            if (sc.over_ext) {
                eval_ = twisted ? to_dynpoly(parse_twisted(v, sc.ext)) : parse_dynpoly(v, sc.ext);
            } else {
                kval = twisted ? to_dynpoly(parse_twisted(v, sc.field)) : parse_dynpoly(v, sc.field);
            }
            return 0;
        });
    };
    load_map("f", sc.f, sc.f_ext, sc.f_twisted);
    load_map("g", sc.g, sc.g_ext, sc.g_twisted);

    auto load_point = [&](const std::string& key, std::optional<RatFunc>& kval, std::optional<ExtElem>& eval_) {
        if (!has(key)) return;
        with_key(key, [&] {
            if (sc.over_ext) eval_ = parse_ext_element(get(key), sc.ext);
            else kval = parse_element(get(key), sc.field);
            return 0;
        });
    };
    load_point("alpha", sc.alpha, sc.alpha_ext);
    load_point("beta", sc.beta, sc.beta_ext);
    if (has("curve")) sc.curve = with_key("curve", [&] { return parse_curve(get("curve"), sc.field); });

    auto degree_of = [&](const std::string& key) -> BigInt {
        if (sc.over_ext) return key == "f" ? sc.f_ext->degree() : sc.g_ext->degree();
        return key == "f" ? sc.f->degree() : sc.g->degree();
    };
    auto need_map = [&](const std::string& key, BigInt min_degree) {
        require(key);
        if (degree_of(key) < min_degree)
            throw ValidationError(key, "degree must be at least " + min_degree.str());
    };

    switch (sc.task) {
        case Task::Intersect:
        case Task::Synchronized:
        case Task::CurveReturn:
            need_map("f", 2);
            need_map("g", 2);
            require("alpha");
            require("beta");
            if (sc.task == Task::CurveReturn) require("curve");
            break;
        case Task::Heights:
            if (sc.over_ext) throw ValidationError("ext", "heights are computed over K only");
            need_map("f", 2);
            require("alpha");
            if (has("g")) {
                need_map("g", 2);
                require("beta");
            }
            break;
        case Task::Classify:
            need_map("f", 2);
            if (has("g")) need_map("g", 2);
            break;
        case Task::VerifyExample:
            break;
    }
    return sc;
}

}  // namespace orbitlab
