#pragma once

#include <string>
#include <vector>

#include "orbitlab/orbits.hpp"
#include "orbitlab/twisted.hpp"

namespace orbitlab {

struct CheckResult {
    enum class Status { Pass, Fail, Skipped };
    std::string name;
    Status status = Status::Pass;
    std::string detail;
    // Both sides of the first failing identity.
    std::string lhs;
    std::string rhs;
    double seconds = 0;
};

const char* status_name(CheckResult::Status s);

struct VerifyOptions {
    std::uint64_t pmax = 5;
    Budget budget;
    std::uint64_t seed = 20240531;
};

// Each check takes the objects it verifies so that a mutated input yields FAIL.

// g^m(0) = t^(2^m) + t for 1 <= m <= m_max
CheckResult check_shifted_square_orbit(const KDynPoly& g, unsigned m_max);
// f^(2^k)(t) = t^(2^(2^k)) + t for 0 <= k <= k_max
CheckResult check_sum_map_orbit(const KDynPoly& f, unsigned k_max);
// f = t x + d, alpha = 1 - e, g = tau_{-e} o x^r o tau_e, beta = t - e with e = d / (t - 1)
CheckResult check_linear_orbits(const FieldPtr& field, const RatFunc& d, unsigned r, unsigned n_max);
// g = f + x + f(t) for additive f over F_p(t)
CheckResult check_twisted_iterates(const KTwisted& f, unsigned m_max, unsigned k_max, const Budget& budget);
// gt = lambda + T^r, f = x^p
CheckResult check_linear_twist_orbits(const FieldPtr& field, const RatFunc& lambda, unsigned r, unsigned m_max,
                                      unsigned k_max, const Budget& budget);
// g = tau_d o (f^m + h) o tau_{-d}; g^(p^k)(alpha + d) = f^(m p^k)(alpha) + h^(p^k)(alpha) + d
CheckResult check_conjugated_family(const std::string& label, const KDynPoly& f, const KDynPoly& h, unsigned m,
                                    const RatFunc& alpha, const RatFunc& delta, unsigned k_max, const Budget& budget);
CheckResult check_sum_power_identity(std::uint64_t p, unsigned n_max, const Budget& budget);
// The two iterate identities and, for odd p, the f^r(1) = 0 obstruction
CheckResult check_artin_schreier_family(std::uint64_t p, unsigned n_max, const Budget& budget);
// g^m(-lambda t) = -lambda t and f^m(-lambda t) != -lambda t
CheckResult check_nonsharing(const FieldPtr& field, const RatFunc& lambda, unsigned r, unsigned m_max);
// delta with f(delta) - delta = gamma conjugates f to f + gamma
CheckResult check_affine_conjugacy(const KDynPoly& f, const RatFunc& gamma, const Budget& budget);

// Canonical instances.
KDynPoly quadratic_pair_f();
KDynPoly quadratic_pair_g();
FieldPtr gf_pr(std::uint64_t p, unsigned r);

/// The full built-in suite; checks whose characteristic exceeds pmax are skipped.
std::vector<CheckResult> verify_all(const VerifyOptions& opts);

/// The subset belonging to one example id ("1.3", "2.1", "2.3", "2.4", "2.5",
/// "2.6", "2.8", "2.9"); p = 0 selects the default characteristics.
std::vector<CheckResult> verify_example(const std::string& id, std::uint64_t p, std::uint64_t nmax,
                                        const VerifyOptions& opts);

}  // namespace orbitlab
