#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace orbitlab {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Base-p digits of a non-negative integer, least significant first.
inline std::vector<std::uint64_t> base_digits(BigInt n, std::uint64_t p) {
    std::vector<std::uint64_t> out;
    while (n > 0) {
        out.push_back(static_cast<std::uint64_t>(n % p));
        n /= p;
    }
    return out;
}

inline BigInt big_pow(BigInt base, std::uint64_t exp) {
    BigInt acc = 1;
    while (exp) {
        if (exp & 1U) acc *= base;
        exp >>= 1U;
        if (exp) base *= base;
    }
    return acc;
}

// Returns k when n == p^k, otherwise -1.
inline long long exact_log(const BigInt& n, std::uint64_t p) {
    if (n <= 0) return -1;
    BigInt m = n;
    long long k = 0;
    while (m % p == 0) {
        m /= p;
        ++k;
    }
    return m == 1 ? k : -1;
}

// Decimal digits only; leading zeros never switch the radix.
inline BigInt from_decimal(const std::string& digits) {
    const auto first = digits.find_first_not_of('0');
    return first == std::string::npos ? BigInt(0) : BigInt(digits.substr(first));
}

inline std::string to_string(const BigInt& n) { return n.str(); }

inline std::string to_string(const BigRational& q) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace orbitlab

namespace orbitlab {

// Binary powering for any multiplicative type; `one` is the identity.
template <class T>
T small_pow(T base, std::uint64_t n, T one) {
    T acc = std::move(one);
    while (n) {
        if (n & 1U) acc = acc * base;
        n >>= 1U;
        if (n) base = base * base;
    }
    return acc;
}

}  // namespace orbitlab
