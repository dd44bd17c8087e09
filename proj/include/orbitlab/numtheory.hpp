#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace orbitlab {

// Prime factorization by trial division, ascending primes with multiplicities.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

/// Minimal coprime (r, s) with d^r = e^s, or none when d and e are
/// multiplicatively independent.
std::optional<std::pair<std::uint64_t, std::uint64_t>> multiplicative_dependence(std::uint64_t d, std::uint64_t e);

}  // namespace orbitlab
