#include "sadic/config.hpp"

#include "sadic/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace sadic {

using nlohmann::json;

std::string to_string(OutputFormat f) {
    return f == OutputFormat::Text ? "text" : "structured";
}

void AnalysisConfig::validate() const {
    if (depth < 2) throw ConfigError("depth", "must be >= 2");
    if (eps <= 0) throw ConfigError("eps", "must be positive");
    if (growth_threshold <= 0) throw ConfigError("growth_threshold", "must be positive");
    if (budget <= 0) throw ConfigError("budget", "must be positive");
    if (depth > sequence.available_depth())
        throw ConfigError("depth", "exceeds the explicit sequence length of " +
                                       std::to_string(sequence.available_depth()));
}

namespace {

std::string block_to_rules(const json& block, const std::string& where) {
    if (block.is_string()) return block.get<std::string>();
    if (block.is_array()) {
        std::ostringstream out;
        for (const auto& line : block) {
            if (!line.is_string())
                throw ConfigError(where, "morphism rule lines must be strings");
            out << line.get<std::string>() << "\n";
        }
        return out.str();
    }
    throw ConfigError(where, "morphism block must be a string or an array of rule lines");
}

std::vector<std::string> lhs_letters(const std::string& rules, const std::string& where) {
    std::vector<std::string> letters;
    std::istringstream in(rules);
    std::string line;
    while (std::getline(in, line)) {
        size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        if (line[b] == '#') continue;
        size_t arrow = line.find("->");
        if (arrow == std::string::npos)
            throw ConfigError(where, "expected 'letter -> image' in '" + line + "'");
        std::string lhs = line.substr(b, arrow - b);
        size_t e = lhs.find_last_not_of(" \t");
        lhs = lhs.substr(0, e + 1);
        letters.push_back(lhs);
    }
    if (letters.empty()) throw ConfigError(where, "morphism block has no rules");
    return letters;
}

DirectiveSequence parse_sequence(const json& node, int depth) {
    if (!node.is_object()) throw ConfigError("sequence", "must be an object");
    const std::string type = node.value("type", "explicit");
    if (type != "periodic" && type != "explicit")
        throw ConfigError("sequence.type", "must be 'periodic' or 'explicit'");
    if (!node.contains("morphisms") || !node["morphisms"].is_array() ||
        node["morphisms"].empty())
        throw ConfigError("sequence.morphisms", "must be a nonempty array");

    std::vector<std::string> blocks;
    for (size_t i = 0; i < node["morphisms"].size(); ++i)
        blocks.push_back(block_to_rules(node["morphisms"][i],
                                        "sequence.morphisms[" + std::to_string(i) + "]"));

    std::optional<Alphabet> level0;
    if (node.contains("alphabet")) {
        if (!node["alphabet"].is_array())
            throw ConfigError("sequence.alphabet", "must be an array of letters");
        std::vector<std::string> letters;
        for (const auto& l : node["alphabet"]) {
            if (!l.is_string()) throw ConfigError("sequence.alphabet", "letters must be strings");
            letters.push_back(l.get<std::string>());
        }
        try {
            level0 = Alphabet(letters);
        } catch (const std::invalid_argument& e) {
            throw ConfigError("sequence.alphabet", e.what());
        }
    }

    if (type == "explicit") {
        std::vector<Morphism> levels;
        for (size_t i = 0; i < blocks.size(); ++i) {
            const std::string where = "sequence.morphisms[" + std::to_string(i) + "]";
            std::optional<Alphabet> codomain;
            if (i == 0) {
                codomain = level0;
            } else {
                codomain = levels.back().domain();
            }
            try {
                levels.push_back(parse_morphism(blocks[i], codomain));
            } catch (const ConfigError& e) {
                throw ConfigError(where, e.what());
            }
        }
        try {
            return DirectiveSequence::explicit_list(std::move(levels));
        } catch (const std::invalid_argument& e) {
            throw ConfigError("sequence", e.what());
        }
    }

    // Periodic: resolve the cycle, then assign codomains around it.
    std::vector<int> period;
    if (node.contains("period")) {
        if (!node["period"].is_array() || node["period"].empty())
            throw ConfigError("sequence.period", "must be a nonempty array of indices");
        for (const auto& idx : node["period"]) {
            if (!idx.is_number_integer())
                throw ConfigError("sequence.period", "indices must be integers");
            int i = idx.get<int>();
            if (i < 0 || i >= static_cast<int>(blocks.size()))
                throw ConfigError("sequence.period",
                                  "index " + std::to_string(i) + " out of range");
            period.push_back(i);
        }
    } else {
        for (size_t i = 0; i < blocks.size(); ++i) period.push_back(static_cast<int>(i));
    }

    const int p = static_cast<int>(period.size());
    std::vector<std::vector<std::string>> domains;
    for (int k = 0; k < p; ++k)
        domains.push_back(
            lhs_letters(blocks[static_cast<size_t>(period[static_cast<size_t>(k)])],
                        "sequence.period[" + std::to_string(k) + "]"));

    std::vector<Morphism> cycle;
    for (int k = 0; k < p; ++k) {
        // codomain(cycle[k]) = domain(cycle[(k-1) mod p]); the level-0
        // alphabet is then domain(cycle[p-1]) automatically.
        const auto& codomain_letters = domains[static_cast<size_t>((k - 1 + p) % p)];
        Alphabet codomain;
        try {
            codomain = Alphabet(codomain_letters);
        } catch (const std::invalid_argument& e) {
            throw ConfigError("sequence.period[" + std::to_string(k) + "]", e.what());
        }
        try {
            cycle.push_back(
                parse_morphism(blocks[static_cast<size_t>(period[static_cast<size_t>(k)])],
                               codomain));
        } catch (const ConfigError& e) {
            throw ConfigError("sequence.period[" + std::to_string(k) + "]", e.what());
        }
    }
    if (level0 && cycle[0].codomain() != *level0)
        throw ConfigError("sequence.alphabet",
                          "does not match the cycle chaining (level-0 alphabet is the domain "
                          "of the last cycle morphism)");
    try {
        return DirectiveSequence::periodic(std::move(cycle), depth);
    } catch (const std::invalid_argument& e) {
        throw ConfigError("sequence", e.what());
    }
}

} // namespace

AnalysisConfig parse_config_json(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError("", std::string("malformed JSON: ") + e.what());
    }
    if (!root.is_object()) throw ConfigError("", "config must be a JSON object");

    AnalysisConfig config;
    if (root.contains("depth")) {
        if (!root["depth"].is_number_integer()) throw ConfigError("depth", "must be an integer");
        config.depth = root["depth"].get<int>();
    }
    if (root.contains("eps")) {
        if (!root["eps"].is_number()) throw ConfigError("eps", "must be a number");
        config.eps = root["eps"].get<double>();
    }
    if (root.contains("growth_threshold")) {
        if (!root["growth_threshold"].is_number_integer())
            throw ConfigError("growth_threshold", "must be an integer");
        config.growth_threshold = Int(root["growth_threshold"].get<int64_t>());
    }
    if (root.contains("budget")) {
        if (!root["budget"].is_number_integer()) throw ConfigError("budget", "must be an integer");
        config.budget = root["budget"].get<int64_t>();
    }
    if (root.contains("format")) {
        if (!root["format"].is_string()) throw ConfigError("format", "must be a string");
        const std::string f = root["format"].get<std::string>();
        if (f == "text") config.format = OutputFormat::Text;
        else if (f == "structured") config.format = OutputFormat::Structured;
        else throw ConfigError("format", "must be 'text' or 'structured'");
    }

    const bool has_seq = root.contains("sequence");
    const bool has_preset = root.contains("preset");
    if (has_seq == has_preset)
        throw ConfigError("", "config needs exactly one of 'sequence' or 'preset'");
    if (has_preset) {
        if (!root["preset"].is_string()) throw ConfigError("preset", "must be a string");
        const std::string name = root["preset"].get<std::string>();
        config.sequence = preset_sequence(name, config.depth);
        config.sequence_label = name;
    } else {
        // Explicit sequences default to their own length as depth.
        if (root["sequence"].value("type", "explicit") == std::string("explicit") &&
            !root.contains("depth")) {
            config.depth = static_cast<int>(root["sequence"]["morphisms"].size());
        }
        config.sequence = parse_sequence(root["sequence"], config.depth);
        config.sequence_label = "config";
    }
    config.validate();
    return config;
}

AnalysisConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("", "cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_json(buf.str());
}

namespace {

Morphism preset_morphism(const std::string& rules) { return parse_morphism(rules); }

} // namespace

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names = {
        "fibonacci", "thue-morse", "tribonacci",       "chacon",
        "two-copies", "merge-two-copies", "identity",
    };
    return names;
}

DirectiveSequence preset_sequence(const std::string& name, int depth) {
    if (name == "fibonacci")
        return DirectiveSequence::periodic({preset_morphism("a -> ab\nb -> a")}, depth);
    if (name == "thue-morse")
        return DirectiveSequence::periodic({preset_morphism("a -> ab\nb -> ba")}, depth);
    if (name == "tribonacci")
        return DirectiveSequence::periodic({preset_morphism("a -> ab\nb -> ac\nc -> a")}, depth);
    if (name == "chacon")
        return DirectiveSequence::periodic({preset_morphism("a -> aabc\nb -> bc\nc -> abc")},
                                           depth);
    if (name == "two-copies")
        return DirectiveSequence::periodic(
            {preset_morphism("a -> ab\nb -> a\nc -> cd\nd -> c")}, depth);
    if (name == "merge-two-copies")
        return DirectiveSequence::with_head(
            {parse_morphism("a -> a\nb -> b\nc -> a\nd -> b")},
            {preset_morphism("a -> ab\nb -> a\nc -> cd\nd -> c")}, depth);
    if (name == "identity")
        return DirectiveSequence::periodic({preset_morphism("a -> a\nb -> b")}, depth);
    throw ConfigError("preset", "unknown preset '" + name + "'; available: fibonacci, "
                                "thue-morse, tribonacci, chacon, two-copies, "
                                "merge-two-copies, identity");
}

AnalysisConfig preset_config(const std::string& name) {
    AnalysisConfig config;
    config.sequence = preset_sequence(name, config.depth);
    config.sequence_label = name;
    config.validate();
    return config;
}

} // namespace sadic
