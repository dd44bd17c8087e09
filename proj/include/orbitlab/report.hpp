#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "orbitlab/parse.hpp"
#include "orbitlab/verify.hpp"

namespace orbitlab {

enum ExitCode : int { kExitOk = 0, kExitVerificationFailed = 1, kExitBudget = 2, kExitInvalid = 3 };

/// Command-line overrides applied on top of the scenario file.
struct RunOptions {
    std::optional<std::uint64_t> cap_m;
    std::optional<std::uint64_t> cap_n;
    std::optional<BigInt> degree_budget;
    std::optional<std::uint64_t> tau_budget;
    std::uint64_t pmax = 5;
};

/// Deterministic body plus wall-clock data kept apart so that reruns compare equal.
struct Report {
    nlohmann::json body = nlohmann::json::object();
    nlohmann::json timing = nlohmann::json::object();
    int exit_code = kExitOk;
};

Report run_scenario(const Scenario& sc, const RunOptions& opts = {});
// Parses and runs; parse and validation failures become an exit-3 report.
Report run_scenario_text(const std::string& text, const std::string& source, const RunOptions& opts = {});
Report run_scenario_file(const std::string& path, const RunOptions& opts = {});

Report verify_all_report(const RunOptions& opts = {});

// {"reports": [...]} with the worst exit code.
Report combine(const std::vector<Report>& reports);

enum class Format { Text, Json };

std::string emit_report(const Report& report, Format format, bool with_timing = true);

}  // namespace orbitlab
