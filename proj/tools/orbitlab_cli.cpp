#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <iostream>
#include <thread>

#include "orbitlab/report.hpp"

namespace {

std::vector<orbitlab::Report> run_parallel(const std::vector<std::string>& files, const orbitlab::RunOptions& opts,
                                           unsigned jobs) {
    std::vector<orbitlab::Report> out(files.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < files.size(); i = next++) out[i] = orbitlab::run_scenario_file(files[i], opts);
    };
    const unsigned n = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(files.size())));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"orbitlab: orbit intersections of polynomials over function fields"};
    app.set_version_flag("--version", "orbitlab 0.1.0");

    std::vector<std::string> scenarios;
    bool verify_all = false;
    std::string format = "text";
    std::uint64_t pmax = 5;
    std::optional<std::uint64_t> cap_m, cap_n, tau_budget;
    std::optional<std::string> degree_budget;
    unsigned jobs = 1;
    bool no_timing = false;

    app.add_option("--scenario,scenario", scenarios, "Scenario file (repeatable)")->check(CLI::ExistingFile);
    app.add_flag("--verify-all", verify_all, "Run the built-in identity suite");
    app.add_option("--pmax", pmax, "Skip verifier checks in characteristic above this")->capture_default_str();
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    app.add_option("--cap-m", cap_m, "Override capM for every scenario");
    app.add_option("--cap-n", cap_n, "Override capN for every scenario");
    app.add_option("--degree-budget", degree_budget, "Composition work budget (default 1048576)");
    app.add_option("--tau-budget", tau_budget, "Twisted degree budget (default 4096)");
    app.add_option("--jobs,-j", jobs, "Scenarios run in parallel")->check(CLI::Range(1U, 256U))->capture_default_str();
    app.add_flag("--no-timing", no_timing, "Omit wall-clock data for byte-identical reruns");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return orbitlab::kExitInvalid;
    }
    if (scenarios.empty() && !verify_all) {
        std::cerr << app.help() << "\nnothing to do: pass --scenario or --verify-all\n";
        return orbitlab::kExitInvalid;
    }

    orbitlab::RunOptions opts;
    opts.cap_m = cap_m;
    opts.cap_n = cap_n;
    opts.tau_budget = tau_budget;
    opts.pmax = pmax;
    if (degree_budget) {
        const std::string& s = *degree_budget;
        if (s.empty() || s.size() > 1000 || !std::all_of(s.begin(), s.end(), ::isdigit)) {
            std::cerr << "--degree-budget: expected a non-negative integer\n";
            return orbitlab::kExitInvalid;
        }
        opts.degree_budget = orbitlab::from_decimal(s);
    }

    std::vector<orbitlab::Report> reports;
    if (verify_all) reports.push_back(orbitlab::verify_all_report(opts));
    for (auto& r : run_parallel(scenarios, opts, jobs)) reports.push_back(std::move(r));

    const orbitlab::Report report = reports.size() == 1 ? reports.front() : orbitlab::combine(reports);
    const auto fmt = format == "json" ? orbitlab::Format::Json : orbitlab::Format::Text;
    std::cout << orbitlab::emit_report(report, fmt, !no_timing);
    return report.exit_code;
}
