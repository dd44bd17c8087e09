#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "orbitlab/orbits.hpp"
#include "orbitlab/twisted.hpp"

namespace orbitlab {

struct ParseContext {
    FieldPtr field;
    ExtPtr ext;  // null when no extension is declared
    Budget budget;
};

// Maximum nesting of parentheses and unary minus.
inline constexpr std::size_t kMaxParseDepth = 256;

// "GF(p)", "GF(q; mod=...)" or "GF(p^r; mod=...)"; without mod the first
// irreducible monic of degree r in index order is used.
FieldPtr parse_field_spec(const std::string& text);
// Monic-izable polynomial in y over K, e.g. "y^2 + y + t".
ExtPtr parse_ext_spec(const std::string& text, const FieldPtr& field);

FFPoly parse_ffpoly(const std::string& text, const FieldPtr& field);
RatFunc parse_element(const std::string& text, const FieldPtr& field);
ExtElem parse_ext_element(const std::string& text, const ExtPtr& ext);
KDynPoly parse_dynpoly(const std::string& text, const FieldPtr& field);
ExtDynPoly parse_dynpoly(const std::string& text, const ExtPtr& ext);
KTwisted parse_twisted(const std::string& text, const FieldPtr& field);
ExtTwisted parse_twisted(const std::string& text, const ExtPtr& ext);
// Polynomial in x1, x2 over K.
PlaneCurve parse_curve(const std::string& text, const FieldPtr& field);

using ParsedValue = std::variant<FFPoly, RatFunc, ExtElem, KDynPoly, ExtDynPoly, KTwisted, ExtTwisted>;

/// Chooses the narrowest type: twisted if T occurs, dynamical if x occurs,
/// extension element if y occurs, FFPoly for polynomials in t, else RatFunc.
ParsedValue parse_expr(const std::string& text, const ParseContext& ctx);

std::string print_canonical(const ParsedValue& v);

enum class Task { Intersect, Synchronized, CurveReturn, VerifyExample, Heights, Classify };
const char* task_name(Task t);

/// Parsed scenario file. Objects live over K unless some entry uses y, in
/// which case all of them are lifted into the declared extension ring.
struct Scenario {
    std::string source;  // file name or label
    std::map<std::string, std::string> entries;

    FieldPtr field;
    ExtPtr ext;
    bool over_ext = false;
    Task task = Task::Intersect;

    std::optional<KDynPoly> f, g;
    std::optional<ExtDynPoly> f_ext, g_ext;
    bool f_twisted = false, g_twisted = false;
    std::optional<RatFunc> alpha, beta;
    std::optional<ExtElem> alpha_ext, beta_ext;
    std::optional<PlaneCurve> curve;

    std::uint64_t cap_m = 64, cap_n = 64;
    Budget budget;
    std::uint64_t r = 1, s = 1, a = 0, b = 0;
    bool prune = false;
    BigInt denominator_bound = 8;
    std::string example;
    std::uint64_t p = 0, nmax = 0;
    std::optional<std::string> expect;
};

Scenario parse_scenario(const std::string& text, const std::string& source = "<input>");

}  // namespace orbitlab
