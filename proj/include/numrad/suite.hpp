#pragma once

#include "numrad/checks.hpp"
#include "numrad/instances.hpp"
#include "numrad/norms.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace numrad {

inline constexpr std::uint64_t kDefaultMasterSeed = 20240917;

struct SuiteConfig {
    std::vector<std::string> checks{kCheckIds.begin(), kCheckIds.end()};
    std::vector<Family> families{kAllFamilies.begin(), kAllFamilies.end()};
    std::vector<int> dims{2, 3, 4, 5, 6, 7, 8};
    int trials = 1000;
    std::uint64_t master_seed = kDefaultMasterSeed;
    double tol = 1e-8;
    double strict_margin = 1e-6;
    std::vector<double> p_list{1.0, 2.0, 3.0, kSchattenInfinity};
    /// Keep every CheckOutcome in the report (memory grows with trials).
    bool keep_outcomes = false;
};

/// Parses the flat "key = value" format; '#' starts a comment. Lists are
/// comma or space separated, "all" selects every check or family, dims also
/// accept a range "2-8", and p_list accepts "inf". Unknown keys throw
/// ParseError; absent keys keep their defaults.
SuiteConfig parse_suite_config(std::string_view text);
SuiteConfig read_suite_config(const std::string& path);
std::string format_suite_config(const SuiteConfig& config);

/// Labels of the min-slack histogram bins, in order.
inline constexpr std::array<std::string_view, 6> kSlackBins = {"< -tol",       "[-tol, tol]",   "(tol, 1e-6]",
                                                                "(1e-6, 1e-3]", "(1e-3, 1]",     "> 1"};

struct CheckSummary {
    std::string check_id;
    int trials = 0;
    int failures = 0;
    double min_slack = 0.0;  ///< +inf when no trial ran
    std::array<int, kSlackBins.size()> histogram{};
    /// Per adjacent chain pair: trials where |slack| <= 2 tol.
    std::vector<int> tight_pairs;
    int certificates = 0;
    double max_width = 0.0;
    int width_violations = 0;      ///< width above the requested tolerance
    int soundness_violations = 0;  ///< Rayleigh probe above the certified upper bound
    int nonmonotone = 0;           ///< refinement history not monotone
};

struct TrialReport {
    SuiteConfig config;
    std::vector<CheckSummary> checks;
    int failures = 0;
    bool pass = true;
    double wall_seconds = 0.0;
    std::vector<CheckOutcome> outcomes;  ///< filled when config.keep_outcomes
};

/// Per-trial instance: dimension, family and p cycle through the config
/// lists; m is uniform on [0.1, 1]; the seed derives from the master seed,
/// the check id and the trial index.
InstanceSpec trial_instance(const SuiteConfig& config, std::string_view check_id, int trial);

/// Runs every (check, trial) pair. Trials are distributed over threads under
/// Execution::Parallel; the report is reduced in trial order and is identical
/// to the Execution::Serial one apart from wall time. Check failures are
/// recorded; numerical errors abort the run and propagate.
TrialReport run_suite(const SuiteConfig& config, Execution execution = Execution::Parallel);

/// Structured text: config echo, one record per check, then the summary line
/// "SUITE PASS failures=0" (or FAIL).
std::string render_report(const TrialReport& report, bool include_wall_time = true);
std::string render_report_json(const TrialReport& report, bool include_wall_time = true);

}  // namespace numrad
