#include "orbitlab/report.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

namespace orbitlab {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string rat_str(const BigRational& q) { return to_string(q); }

json pairs_json(const std::vector<IndexPair>& pairs) {
    json out = json::array();
    for (const auto& [m, n] : pairs) out.push_back({m, n});
    return out;
}

std::string pairs_summary(const std::vector<IndexPair>& pairs) {
    std::string out;
    for (const auto& [m, n] : pairs) {
        if (!out.empty()) out += ",";
        out += "(" + std::to_string(m) + "," + std::to_string(n) + ")";
    }
    return out;
}

std::string list_summary(const std::vector<std::uint64_t>& v) {
    std::string out;
    for (auto x : v) {
        if (!out.empty()) out += ",";
        out += std::to_string(x);
    }
    return out;
}

json model_json(const ReturnModel& model) {
    json out;
    out["finite"] = model.finite;
    json aps = json::array();
    for (const auto& ap : model.progressions) aps.push_back({{"a", ap.a}, {"b", ap.b}});
    out["progressions"] = aps;
    json ps = json::array();
    for (const auto& s : model.psets)
        ps.push_back({{"a", rat_str(s.a)}, {"b", rat_str(s.b)}, {"p", s.p}, {"r", s.r}});
    out["psets"] = ps;
    return out;
}

json error_json(const Error& e) {
    json out;
    out["kind"] = error_kind_name(e.kind());
    out["message"] = e.what();
    if (const auto* se = dynamic_cast<const SyntaxError*>(&e)) out["position"] = se->position();
    if (const auto* ve = dynamic_cast<const ValidationError*>(&e)) out["field"] = ve->field();
    return out;
}

json check_json(const CheckResult& r) {
    json out;
    out["name"] = r.name;
    out["status"] = status_name(r.status);
    out["detail"] = r.detail;
    if (r.status == CheckResult::Status::Fail) {
        out["lhs"] = r.lhs;
        out["rhs"] = r.rhs;
    }
    return out;
}

// Fills "checks"/"summary" and returns whether everything executed passed.
bool checks_into(const std::vector<CheckResult>& results, json& body, json& timing) {
    json checks = json::array();
    json secs = json::array();
    std::size_t pass = 0, failed = 0, skipped = 0;
    for (const auto& r : results) {
        checks.push_back(check_json(r));
        secs.push_back(r.seconds);
        switch (r.status) {
            case CheckResult::Status::Pass: ++pass; break;
            case CheckResult::Status::Fail: ++failed; break;
            case CheckResult::Status::Skipped: ++skipped; break;
        }
    }
    body["checks"] = checks;
    body["summary"] = {{"pass", pass}, {"fail", failed}, {"skipped", skipped}};
    timing["checks"] = secs;
    return failed == 0;
}

struct HeightData {
    json out;
    std::optional<BigRational> exact;
};

HeightData height_data(const KDynPoly& f, const RatFunc& point, const BigInt& D) {
    HeightData h;
    const BigRational target(BigInt(1), BigInt(4) * D * D);
    const HeightEstimate est = canonical_height(f, point, target);
    h.exact = rationalize(est, D);
    h.out["estimate"] = rat_str(est.value);
    h.out["error_bound"] = rat_str(est.error_bound);
    h.out["iterations"] = est.iterations;
    h.out["rationalized"] = h.exact ? json(rat_str(*h.exact)) : json(nullptr);
    return h;
}

json conjugacy_json(const AdditiveConjugacy& c) {
    json out;
    out["outcome"] = c.outcome == AdditiveConjugacy::Outcome::Conjugate ? "conjugate" : "not-conjugate";
    out["shift_equation"] = c.shift_equation.str('b');
    if (c.map_in_k) {
        out["witness_in"] = "K";
        out["map"] = c.map_in_k->str();
        out["additive_form"] = c.form_in_k->str();
    } else if (c.map_in_ext) {
        out["witness_in"] = "extension";
        out["ring"] = c.ring->spec_string();
        out["map"] = c.map_in_ext->str();
        out["additive_form"] = c.form_in_ext->str();
        out["witness_ring_may_not_be_field"] = c.witness_ring_may_not_be_field;
    }
    return out;
}

template <class C>
struct Objects {
    const DynPoly<C>* f = nullptr;
    const DynPoly<C>* g = nullptr;
    const C* alpha = nullptr;
    const C* beta = nullptr;
};

struct Outcome {
    json result;
    std::string summary;
    bool failed = false;
    std::vector<std::string> caveats;
};

std::string caps_caveat(const Scenario& sc) {
    return "results cover only indices within capM = " + std::to_string(sc.cap_m) +
           ", capN = " + std::to_string(sc.cap_n) + "; nothing is claimed beyond the caps";
}

std::optional<Pruning> pruning_for(const Scenario& sc, json& result, std::vector<std::string>& caveats) {
    const HeightData hf = height_data(*sc.f, *sc.alpha, sc.denominator_bound);
    const HeightData hg = height_data(*sc.g, *sc.beta, sc.denominator_bound);
    const BigRational c = sieve_constant(height_gap_constant(*sc.f), height_gap_constant(*sc.g));
    result["pruning"] = {{"height_f", hf.out}, {"height_g", hg.out}, {"sieve_constant", rat_str(c)}};
    if (!hf.exact || !hg.exact) {
        caveats.push_back("pruning disabled: a canonical height did not rationalize with denominator <= " +
                          sc.denominator_bound.str());
        return std::nullopt;
    }
    return Pruning{*hf.exact, *hg.exact, c};
}

template <class C>
Outcome run_intersect(const Scenario& sc, const Objects<C>& o) {
    Outcome out;
    const ReturnSet rs = intersect_orbits(*o.f, *o.alpha, *o.g, *o.beta, sc.cap_m, sc.cap_n);
    out.result["pairs"] = pairs_json(rs.pairs);
    out.result["count"] = rs.pairs.size();
    out.result["exhaustive_within_caps"] = rs.exhaustive;
    out.summary = pairs_summary(rs.pairs);
    if (sc.prune) {
        if constexpr (std::is_same_v<C, RatFunc>) {
            if (auto pr = pruning_for(sc, out.result, out.caveats)) {
                const ReturnSet pruned = intersect_orbits(*o.f, *o.alpha, *o.g, *o.beta, sc.cap_m, sc.cap_n, pr);
                const bool agree = pruned == rs;
                out.result["pruned_agrees"] = agree;
                if (!agree) {
                    out.failed = true;
                    out.result["pruned_pairs"] = pairs_json(pruned.pairs);
                }
            }
        } else {
            out.caveats.push_back("pruning disabled: heights are computed over K only");
        }
    }
    std::vector<std::uint64_t> ms;
    for (const auto& pr : rs.pairs) ms.push_back(pr.first);
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    out.result["model_m"] = model_json(fit_return_model(ms, sc.field->characteristic(), sc.cap_m));
    out.caveats.push_back("model_m is fitted to finitely many indices and is a heuristic description");
    out.caveats.push_back(caps_caveat(sc));
    if (!rs.exhaustive) out.caveats.push_back("some index pairs within the caps could not be decided");
    return out;
}

template <class C>
Outcome run_synchronized(const Scenario& sc, const Objects<C>& o) {
    Outcome out;
    const auto ns = synchronized_collisions(*o.f, *o.alpha, *o.g, *o.beta, sc.r, sc.s, sc.a, sc.b, sc.cap_n);
    out.result["n"] = ns;
    out.result["count"] = ns.size();
    out.result["progression"] = {{"r", sc.r}, {"s", sc.s}, {"a", sc.a}, {"b", sc.b}};
    if (!ns.empty() && sc.r == sc.s && sc.a == sc.b) {
        const ApVerdict v = ap_implies_common_iterate(*o.f, *o.g, sc.r, sc.a, *o.alpha, *o.beta, sc.cap_n, sc.budget);
        out.result["common_iterate_verdict"] = verdict_name(v);
    }
    out.summary = list_summary(ns);
    out.caveats.push_back("results cover only n <= capN = " + std::to_string(sc.cap_n));
    return out;
}

template <class C>
Outcome run_curve(const Scenario& sc, const Objects<C>& o) {
    Outcome out;
    const auto ns = curve_return_set(*o.f, *o.g, *o.alpha, *o.beta, *sc.curve, sc.cap_n);
    out.result["curve"] = sc.curve->str();
    out.result["n"] = ns;
    out.result["count"] = ns.size();
    out.result["model"] = model_json(fit_return_model(ns, sc.field->characteristic(), sc.cap_n));
    out.summary = list_summary(ns);
    out.caveats.push_back("model is fitted to finitely many indices and is a heuristic description");
    out.caveats.push_back("results cover only n <= capN = " + std::to_string(sc.cap_n));
    return out;
}

Outcome run_heights(const Scenario& sc) {
    Outcome out;
    const HeightGapConstant bf = height_gap_constant(*sc.f);
    const HeightData hf = height_data(*sc.f, *sc.alpha, sc.denominator_bound);
    out.result["height_gap_f"] = bf.bound.str();
    out.result["height_f"] = hf.out;
    out.result["D"] = sc.denominator_bound.str();
    out.summary = hf.exact ? rat_str(*hf.exact) : "none";
    if (sc.g) {
        const HeightGapConstant bg = height_gap_constant(*sc.g);
        const HeightData hg = height_data(*sc.g, *sc.beta, sc.denominator_bound);
        const BigRational c = sieve_constant(bf, bg);
        out.result["height_gap_g"] = bg.bound.str();
        out.result["height_g"] = hg.out;
        out.result["sieve_constant"] = rat_str(c);
        out.summary += "," + (hg.exact ? rat_str(*hg.exact) : std::string("none"));
        if (hf.exact && hg.exact) {
            const auto cands = pruned_candidates(*hf.exact, *hg.exact, static_cast<std::uint64_t>(sc.f->degree()),
                                                 static_cast<std::uint64_t>(sc.g->degree()), c, sc.cap_m, sc.cap_n);
            out.result["candidate_pairs"] = pairs_json(cands);
            out.caveats.push_back(caps_caveat(sc));
        }
    }
    return out;
}

template <class C>
Outcome run_classify(const Scenario& sc, const Objects<C>& o) {
    Outcome out;
    out.result["f_additive"] = is_additive(*o.f);
    if constexpr (std::is_same_v<C, RatFunc>) {
        const AdditiveConjugacy cf = conjugate_to_additive(*o.f, sc.budget);
        out.result["f_conjugacy"] = conjugacy_json(cf);
        out.summary = out.result["f_conjugacy"]["outcome"].get<std::string>();
    } else {
        out.summary = is_additive(*o.f) ? "additive" : "not-additive";
        out.caveats.push_back("conjugacy to additive form is searched over K only");
    }
    if (o.g) {
        out.result["g_additive"] = is_additive(*o.g);
        if constexpr (std::is_same_v<C, RatFunc>) {
            const AdditiveConjugacy cg = conjugate_to_additive(*o.g, sc.budget);
            out.result["g_conjugacy"] = conjugacy_json(cg);
            out.summary += "," + out.result["g_conjugacy"]["outcome"].get<std::string>();
        }
        const auto dep = multiplicative_dependence(static_cast<std::uint64_t>(o.f->degree()),
                                                   static_cast<std::uint64_t>(o.g->degree()));
        out.result["multiplicative_dependence"] = dep ? json{dep->first, dep->second} : json(nullptr);
        const auto ci = common_iterate(*o.f, *o.g, sc.cap_m, sc.cap_n, sc.budget);
        out.result["common_iterate"] = ci ? json{ci->first, ci->second} : json(nullptr);
        out.caveats.push_back("common iterates searched only for m <= capM = " + std::to_string(sc.cap_m) +
                              ", n <= capN = " + std::to_string(sc.cap_n));
    }
    return out;
}

template <class C>
Outcome dispatch(const Scenario& sc, const Objects<C>& o) {
    switch (sc.task) {
        case Task::Intersect: return run_intersect(sc, o);
        case Task::Synchronized: return run_synchronized(sc, o);
        case Task::CurveReturn: return run_curve(sc, o);
        case Task::Classify: return run_classify(sc, o);
        default: break;
    }
    throw Error(ErrorKind::InvalidArgument, "task not dispatched");
}

std::string strip_spaces(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

json scenario_echo(const Scenario& sc) {
    json out = json::object();
    for (const auto& [k, v] : sc.entries) out[k] = v;
    return out;
}

Report invalid_report(const std::string& source, const Error& e) {
    Report rep;
    rep.body["source"] = source;
    rep.body["status"] = e.is_budget() ? "budget-exhausted" : "invalid";
    rep.body["error"] = error_json(e);
    rep.exit_code = e.is_budget() ? kExitBudget : kExitInvalid;
    return rep;
}

}  // namespace

Report run_scenario(const Scenario& input, const RunOptions& opts) {
    const auto start = Clock::now();
    Scenario sc = input;
    if (opts.cap_m) sc.cap_m = *opts.cap_m;
    if (opts.cap_n) sc.cap_n = *opts.cap_n;
    if (opts.degree_budget) sc.budget.degree_budget = *opts.degree_budget;
    if (opts.tau_budget) sc.budget.tau_budget = *opts.tau_budget;

    Report rep;
    json& body = rep.body;
    body["source"] = sc.source;
    body["task"] = task_name(sc.task);
    body["scenario"] = scenario_echo(sc);
    body["budget"] = {{"degree_budget", sc.budget.degree_budget.str()}, {"tau_budget", sc.budget.tau_budget}};
    if (sc.task != Task::VerifyExample) {
        body["field"] = sc.field->spec_string();
        if (sc.ext) body["ext"] = sc.ext->spec_string();
        body["over_extension"] = sc.over_ext;
        body["caps"] = {{"capM", sc.cap_m}, {"capN", sc.cap_n}};
    }

    Outcome out;
    try {
        if (sc.task == Task::VerifyExample) {
            VerifyOptions vo;
            vo.pmax = opts.pmax;
            vo.budget = sc.budget;
            const auto results = verify_example(sc.example, sc.p, sc.nmax, vo);
            const bool ok = checks_into(results, out.result, rep.timing);
            out.failed = !ok;
            out.summary = ok ? "PASS" : "FAIL";
            out.result["verdict"] = out.summary;
        } else if (sc.task == Task::Heights) {
            out = run_heights(sc);
        } else if (sc.over_ext) {
            const Objects<ExtElem> o{sc.f_ext ? &*sc.f_ext : nullptr, sc.g_ext ? &*sc.g_ext : nullptr,
                                     sc.alpha_ext ? &*sc.alpha_ext : nullptr, sc.beta_ext ? &*sc.beta_ext : nullptr};
            out = dispatch(sc, o);
        } else {
            const Objects<RatFunc> o{sc.f ? &*sc.f : nullptr, sc.g ? &*sc.g : nullptr,
                                     sc.alpha ? &*sc.alpha : nullptr, sc.beta ? &*sc.beta : nullptr};
            out = dispatch(sc, o);
        }
    } catch (const Error& e) {
        rep.body["status"] = e.is_budget() ? "budget-exhausted" : "invalid";
        rep.body["error"] = error_json(e);
        rep.exit_code = e.is_budget() ? kExitBudget : kExitInvalid;
        rep.timing["seconds"] = seconds_since(start);
        return rep;
    }

    body["result"] = out.result;
    body["summary"] = out.summary;
    body["caveats"] = out.caveats;
    if (sc.expect) {
        const bool match = strip_spaces(*sc.expect) == strip_spaces(out.summary);
        body["expect"] = {{"expected", *sc.expect}, {"actual", out.summary}, {"match", match}};
        if (!match) out.failed = true;
    }
    body["status"] = out.failed ? "fail" : "ok";
    rep.exit_code = out.failed ? kExitVerificationFailed : kExitOk;
    rep.timing["seconds"] = seconds_since(start);
    return rep;
}

Report run_scenario_text(const std::string& text, const std::string& source, const RunOptions& opts) {
    Scenario sc;
    try {
        sc = parse_scenario(text, source);
    } catch (const Error& e) {
        return invalid_report(source, e);
    }
    return run_scenario(sc, opts);
}

Report run_scenario_file(const std::string& path, const RunOptions& opts) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return invalid_report(path, ValidationError("scenario", "cannot read file '" + path + "'"));
    std::ostringstream ss;
    ss << in.rdbuf();
    return run_scenario_text(ss.str(), path, opts);
}

Report verify_all_report(const RunOptions& opts) {
    const auto start = Clock::now();
    VerifyOptions vo;
    vo.pmax = opts.pmax;
    if (opts.degree_budget) vo.budget.degree_budget = *opts.degree_budget;
    if (opts.tau_budget) vo.budget.tau_budget = *opts.tau_budget;
    Report rep;
    rep.body["task"] = "verify-all";
    rep.body["pmax"] = opts.pmax;
    const bool ok = checks_into(verify_all(vo), rep.body, rep.timing);
    rep.body["status"] = ok ? "ok" : "fail";
    rep.exit_code = ok ? kExitOk : kExitVerificationFailed;
    rep.timing["seconds"] = seconds_since(start);
    return rep;
}

Report combine(const std::vector<Report>& reports) {
    Report out;
    out.body["reports"] = json::array();
    out.timing["reports"] = json::array();
    for (const auto& r : reports) {
        out.body["reports"].push_back(r.body);
        out.timing["reports"].push_back(r.timing);
        out.exit_code = std::max(out.exit_code, r.exit_code);
    }
    return out;
}

namespace {

std::string scalar_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "none";
    if (v.is_array()) {
        std::string s;
        for (const auto& e : v) {
            if (!s.empty()) s += " ";
            s += e.is_array() && e.size() == 2 ? "(" + scalar_text(e[0]) + "," + scalar_text(e[1]) + ")"
                                               : scalar_text(e);
        }
        return s.empty() ? "(empty)" : s;
    }
    return v.dump();
}

void text_fields(std::ostringstream& os, const json& obj, const std::string& indent) {
    for (const auto& [k, v] : obj.items()) {
        const bool nested_array = v.is_array() && !v.empty() && v[0].is_object();
        if (v.is_object()) {
            os << indent << k << ":\n";
            text_fields(os, v, indent + "  ");
        } else if (nested_array) {
            os << indent << k << ":\n";
            for (const auto& e : v) {
                os << indent << "  -\n";
                text_fields(os, e, indent + "    ");
            }
        } else {
            os << indent << k << ": " << scalar_text(v) << "\n";
        }
    }
}

void text_checks(std::ostringstream& os, const json& body) {
    for (const auto& c : body["checks"]) {
        os << c["status"].get<std::string>() << "  " << c["name"].get<std::string>();
        const std::string detail = c["detail"].get<std::string>();
        if (!detail.empty()) os << "  (" << detail << ")";
        os << "\n";
        if (c.contains("lhs")) {
            os << "    lhs: " << c["lhs"].get<std::string>() << "\n";
            os << "    rhs: " << c["rhs"].get<std::string>() << "\n";
        }
    }
    const auto& s = body["summary"];
    os << "summary: " << s["pass"].dump() << " passed, " << s["fail"].dump() << " failed, " << s["skipped"].dump()
       << " skipped\n";
}

void text_single(std::ostringstream& os, const json& body, const json& timing, bool with_timing) {
    const std::string task = body.value("task", std::string("scenario"));
    os << "== " << task;
    if (body.contains("source")) os << " [" << body["source"].get<std::string>() << "]";
    os << " ==\n";
    os << "status: " << body.value("status", std::string("?")) << "\n";
    if (body.contains("error")) {
        const auto& e = body["error"];
        os << "error: " << e["kind"].get<std::string>() << ": " << e["message"].get<std::string>() << "\n";
    }
    if (task == "verify-all") {
        text_checks(os, body);
    } else if (body.contains("result")) {
        for (const char* k : {"field", "ext"})
            if (body.contains(k)) os << k << ": " << body[k].get<std::string>() << "\n";
        if (body["result"].contains("checks")) {
            text_checks(os, body["result"]);
        } else {
            text_fields(os, body["result"], "");
        }
        if (body.contains("expect")) {
            const auto& e = body["expect"];
            os << "expect: " << (e["match"].get<bool>() ? "match" : "MISMATCH") << " (expected "
               << e["expected"].get<std::string>() << ", got " << e["actual"].get<std::string>() << ")\n";
        }
        for (const auto& c : body["caveats"]) os << "caveat: " << c.get<std::string>() << "\n";
    }
    if (with_timing && timing.contains("seconds")) os << "time: " << timing["seconds"].dump() << " s\n";
}

}  // namespace

std::string emit_report(const Report& report, Format format, bool with_timing) {
    if (format == Format::Json) {
        json doc = report.body;
        if (with_timing) doc["timing"] = report.timing;
        return doc.dump(2) + "\n";
    }
    std::ostringstream os;
    if (report.body.contains("reports")) {
        const auto& bodies = report.body["reports"];
        for (std::size_t i = 0; i < bodies.size(); ++i) {
            if (i) os << "\n";
            const json timing = report.timing.contains("reports") ? report.timing["reports"][i] : json::object();
            text_single(os, bodies[i], timing, with_timing);
        }
    } else {
        text_single(os, report.body, report.timing, with_timing);
    }
    return os.str();
}

}  // namespace orbitlab
