#include "orbitlab/heights.hpp"

namespace orbitlab {

namespace {

BigInt floor_of(const BigRational& x) {
    BigInt n = boost::multiprecision::numerator(x), d = boost::multiprecision::denominator(x);
    BigInt q = n / d;
    if (n % d != 0 && n < 0) q -= 1;
    return q;
}

// x^{-1} mod m for gcd(x, m) = 1, in [0, m).
BigInt inverse_mod(BigInt x, const BigInt& m) {
    if (m == 1) return 0;
    BigInt a = ((x % m) + m) % m, b = m, s0 = 1, s1 = 0;
    while (b != 0) {
        BigInt q = a / b, t = a - q * b;
        a = b;
        b = t;
        t = s0 - q * s1;
        s0 = s1;
        s1 = t;
    }
    return ((s0 % m) + m) % m;
}

}  // namespace

HeightGapConstant height_gap_constant(const KDynPoly& f) {
    BigInt sum = 0;
    for (const auto& t : f.terms()) sum += t.coef.height();
    return {f.degree() * sum};
}

HeightEstimate canonical_height(const KDynPoly& f, const RatFunc& gamma, const BigRational& target_error) {
    if (f.degree() < 2) fail(ErrorKind::InvalidArgument, "canonical height needs degree >= 2");
    const BigInt d = f.degree();
    const BigInt b = height_gap_constant(f).bound;
    if (b > 0 && target_error <= 0) fail(ErrorKind::InvalidArgument, "target error must be positive");
    HeightEstimate out;
    RatFunc cur = gamma;
    BigInt dn = 1;
    while (true) {
        out.error_bound = BigRational(b) / BigRational(dn * (d - 1));
        if (out.error_bound <= target_error) break;
        cur = f.evaluate(cur);
        dn *= d;
        ++out.iterations;
    }
    out.value = BigRational(cur.height()) / BigRational(dn);
    return out;
}

BigRational simplest_in(const BigRational& lo, const BigRational& hi) {
    if (lo > hi) fail(ErrorKind::InvalidArgument, "empty interval");
    if (lo <= 0 && hi >= 0) return BigRational(0);
    if (hi < 0) return -simplest_in(-hi, -lo);
    BigInt fl = floor_of(lo);
    if (BigRational(fl) == lo) return lo;
    if (BigRational(fl + 1) <= hi) return BigRational(fl + 1);
    BigRational frac = simplest_in(1 / (hi - BigRational(fl)), 1 / (lo - BigRational(fl)));
    return BigRational(fl) + 1 / frac;
}

std::optional<BigRational> rationalize(const HeightEstimate& e, const BigInt& denominator_bound) {
    if (denominator_bound < 1) return std::nullopt;
    BigRational lo = e.value - e.error_bound, hi = e.value + e.error_bound;
    BigRational x = simplest_in(lo, hi);
    BigInt a = boost::multiprecision::numerator(x), b = boost::multiprecision::denominator(x);
    if (b > denominator_bound) return std::nullopt;
    // Farey neighbours of a/b among denominators <= D.
    const BigInt& dmax = denominator_bound;
    BigInt inv = inverse_mod(a, b);
    BigInt dr = (b - inv) % b;
    dr += b * ((dmax - dr) / b);
    BigRational right(BigInt((1 + a * dr) / b), dr);
    BigInt dl = inv;
    if (b == 1) dl = 0;
    dl += b * ((dmax - dl) / b);
    BigRational left(BigInt((a * dl - 1) / b), dl);
    if (right <= hi || left >= lo) return std::nullopt;
    return x;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> pruned_candidates(const BigRational& u1, const BigRational& u2,
                                                                       std::uint64_t d, std::uint64_t e,
                                                                       const BigRational& c, std::uint64_t cap_m,
                                                                       std::uint64_t cap_n) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    std::vector<BigRational> rhs;
    rhs.reserve(cap_n + 1);
    BigRational acc = u2;
    for (std::uint64_t n = 0; n <= cap_n; ++n) {
        rhs.push_back(acc);
        acc *= e;
    }
    BigRational lhs = u1;
    std::uint64_t start = 0;
    for (std::uint64_t m = 0; m <= cap_m; ++m, lhs *= d) {
        // e^n u2 is nondecreasing in n (u2 >= 0), so skip the prefix that is already too small.
        while (start <= cap_n && u2 >= 0 && rhs[start] <= lhs - c) ++start;
        for (std::uint64_t n = (u2 >= 0 ? start : 0); n <= cap_n; ++n) {
            BigRational diff = lhs - rhs[n];
            if (u2 >= 0 && diff <= -c) break;
            if (diff < c && diff > -c) out.emplace_back(m, n);
        }
    }
    return out;
}

BigRational sieve_constant(const HeightGapConstant& bf, const HeightGapConstant& bg) {
    BigRational c(2 * (bf.bound + bg.bound));
    return c < 1 ? BigRational(1) : c;
}

}  // namespace orbitlab
