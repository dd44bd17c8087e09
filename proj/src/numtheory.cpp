#include "orbitlab/numtheory.hpp"

#include <numeric>

namespace orbitlab {

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t q = 2; q * q <= n; ++q) {
        if (n % q) continue;
        unsigned k = 0;
        while (n % q == 0) {
            n /= q;
            ++k;
        }
        out.emplace_back(q, k);
    }
    if (n > 1) out.emplace_back(n, 1U);
    return out;
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> multiplicative_dependence(std::uint64_t d, std::uint64_t e) {
    if (d < 2 || e < 2) return std::nullopt;
    auto fd = factorize(d), fe = factorize(e);
    if (fd.size() != fe.size()) return std::nullopt;
    // d^r = e^s  <=>  r * a_i = s * b_i for every prime
    std::uint64_t a0 = fd[0].second, b0 = fe[0].second;
    std::uint64_t g = std::gcd(a0, b0);
    std::uint64_t r = b0 / g, s = a0 / g;
    for (std::size_t i = 0; i < fd.size(); ++i) {
        if (fd[i].first != fe[i].first) return std::nullopt;
        if (r * fd[i].second != s * fe[i].second) return std::nullopt;
    }
    return std::make_pair(r, s);
}

}  // namespace orbitlab
