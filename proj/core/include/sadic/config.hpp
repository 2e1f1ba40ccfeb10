#pragma once

#include "sadic/directive.hpp"
#include "sadic/numeric.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sadic {

enum class OutputFormat { Text, Structured };

std::string to_string(OutputFormat f);

/// Everything a command run needs. Parsed from a JSON config file and/or
/// assembled from a named preset, with flags overriding individual fields.
struct AnalysisConfig {
    DirectiveSequence sequence;
    /// Preset name or "config" — used only for report labeling.
    std::string sequence_label = "config";
    int depth = 30;
    double eps = 1e-8;
    Int growth_threshold = 1000;
    int64_t budget = 10'000'000;
    OutputFormat format = OutputFormat::Text;

    /// Throws ConfigError on nonpositive parameters or depth < 2.
    void validate() const;
};

/// Parses the JSON config text. Schema:
///
///   {
///     "sequence": {
///       "type": "periodic" | "explicit",
///       "morphisms": [ <block>, ... ],   // block: string or array of rule lines
///       "period": [0, 1, ...],           // periodic only; defaults to all blocks in order
///       "alphabet": ["a", "b"]           // optional level-0 alphabet override
///     },
///     "preset": "fibonacci",             // alternative to "sequence"
///     "depth": 30, "eps": 1e-8, "growth_threshold": 1000,
///     "budget": 10000000, "format": "text" | "structured"
///   }
///
/// Throws ConfigError with a field diagnostic on malformed input.
AnalysisConfig parse_config_json(const std::string& json_text);
AnalysisConfig parse_config_file(const std::string& path);

/// Built-in sequences: fibonacci, thue-morse, tribonacci, chacon,
/// two-copies, merge-two-copies, identity. Throws ConfigError on an
/// unknown name.
DirectiveSequence preset_sequence(const std::string& name, int depth);
const std::vector<std::string>& preset_names();

/// Config with defaults and the named preset as the sequence.
AnalysisConfig preset_config(const std::string& name);

} // namespace sadic
