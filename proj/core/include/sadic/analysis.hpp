#pragma once

#include "sadic/config.hpp"
#include "sadic/cones.hpp"
#include "sadic/directive.hpp"
#include "sadic/measures.hpp"

#include <optional>
#include <string>

namespace sadic {

/// Everything `analyze` computes: the growth verdict, per-level
/// invertibility, and (unless growth already failed with a witness) the
/// cone dimension report.
struct AnalyzeReport {
    GrowthVerdict growth;
    std::vector<LevelInvertibility> invertibility;
    std::optional<ConeReport> cones;
    std::string cones_skip_reason;
};

AnalyzeReport analyze(const AnalysisConfig& config);

/// Outcome of one command invocation. `out` goes to stdout, `err` to
/// stderr. Exit codes are stable: 0 success, 2 config/parse error,
/// 3 infeasible input, 4 ambiguous lift, 5 resource limit, 1 unexpected.
struct CommandResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

CommandResult run_analyze(const AnalysisConfig& config);
CommandResult run_letters(const AnalysisConfig& config);
CommandResult run_cylinder(const AnalysisConfig& config, const std::string& word_text,
                           const std::optional<std::string>& v0_text,
                           const std::optional<std::string>& dump_tower_path = std::nullopt);
/// rules1 is applied to the tower (its domain must be the level-0
/// alphabet); when rules2 is given it is applied after rules1 and the
/// composite is checked against the two-step pushforward.
CommandResult run_pushforward(const AnalysisConfig& config, const std::string& rules1,
                              const std::optional<std::string>& rules2,
                              const std::optional<std::string>& v0_text);
CommandResult run_frequencies(const AnalysisConfig& config, const std::string& word_text,
                              const std::optional<std::string>& dump_path);

} // namespace sadic
