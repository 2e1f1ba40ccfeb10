// Command line front end: configuration ingestion, subcommand dispatch,
// and report emission. All computation lives in the core library.

#include <CLI11.hpp>

#include "sadic/analysis.hpp"
#include "sadic/config.hpp"
#include "sadic/errors.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw sadic::ConfigError("", "cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int emit(const sadic::CommandResult& result) {
    if (!result.out.empty()) std::fputs(result.out.c_str(), stdout);
    if (!result.err.empty()) std::fprintf(stderr, "%s\n", result.err.c_str());
    return result.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"invariant-measure analysis for S-adic subshifts"};
    app.require_subcommand(1);

    std::string config_path;
    std::string preset;
    int depth = -1;
    double eps = -1;
    long long growth_threshold = -1;
    long long budget = -1;
    std::string format;

    app.add_option("config", config_path, "JSON configuration file");
    app.add_option("--preset", preset,
                   "built-in sequence: fibonacci, thue-morse, tribonacci, chacon, two-copies, "
                   "merge-two-copies, identity");
    app.add_option("--depth", depth, "analysis depth (default 30)");
    app.add_option("--eps", eps, "clustering/rank tolerance (default 1e-8)");
    app.add_option("--growth-threshold", growth_threshold,
                   "minimal-length floor for the heuristic growth verdict (default 1000)");
    app.add_option("--budget", budget, "expansion budget in symbols (default 10^7)");
    app.add_option("--format", format, "output format: text or structured");

    auto* cmd_analyze = app.add_subcommand("analyze", "growth, invertibility, and cone report");
    auto* cmd_letters =
        app.add_subcommand("letters", "extreme rays of the level-0 letter cone");

    std::string cyl_word;
    std::optional<std::string> cyl_v0;
    std::optional<std::string> cyl_dump;
    auto* cmd_cylinder =
        app.add_subcommand("cylinder", "certified intervals for the measure of a cylinder");
    cmd_cylinder->add_option("word", cyl_word, "cylinder word over the level-0 alphabet")
        ->required();
    cmd_cylinder->add_option("--v0", cyl_v0,
                             "letter values (comma separated rationals or decimals); default: "
                             "the unique extreme ray");
    cmd_cylinder->add_option("--dump-tower", cyl_dump, "write the lifted tower to a file");

    std::string push_file1;
    std::optional<std::string> push_file2;
    std::optional<std::string> push_v0;
    auto* cmd_pushforward =
        app.add_subcommand("pushforward", "push the measure forward along a morphism");
    cmd_pushforward->add_option("file", push_file1, "morphism rules file (letter -> image)")
        ->required();
    cmd_pushforward->add_option("file2", push_file2,
                                "second morphism applied after the first; enables the "
                                "functoriality self-check");
    cmd_pushforward->add_option("--v0", push_v0, "letter values; default: the unique extreme ray");

    std::string freq_word;
    std::optional<std::string> freq_dump;
    auto* cmd_frequencies =
        app.add_subcommand("frequencies", "sliding-window frequency in a long expansion");
    cmd_frequencies->add_option("word", freq_word, "word over the level-0 alphabet")->required();
    cmd_frequencies->add_option("--dump-expansion", freq_dump,
                                "write the expanded sample word to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    sadic::AnalysisConfig config;
    try {
        if (!config_path.empty()) {
            config = sadic::parse_config_file(config_path);
        } else if (preset.empty()) {
            std::fprintf(stderr, "error: need a config file or --preset NAME\n");
            return 2;
        }
        if (depth > 0) config.depth = depth;
        if (eps > 0) config.eps = eps;
        if (growth_threshold > 0)
            config.growth_threshold = sadic::Int(std::to_string(growth_threshold));
        if (budget > 0) config.budget = budget;
        if (!format.empty()) {
            if (format == "text") config.format = sadic::OutputFormat::Text;
            else if (format == "structured") config.format = sadic::OutputFormat::Structured;
            else throw sadic::ConfigError("--format", "must be 'text' or 'structured'");
        }
        if (!preset.empty()) {
            config.sequence = sadic::preset_sequence(preset, config.depth);
            config.sequence_label = preset;
        }
        config.validate();

        if (*cmd_analyze) return emit(sadic::run_analyze(config));
        if (*cmd_letters) return emit(sadic::run_letters(config));
        if (*cmd_cylinder) return emit(sadic::run_cylinder(config, cyl_word, cyl_v0, cyl_dump));
        if (*cmd_pushforward) {
            std::string rules1 = read_file(push_file1);
            std::optional<std::string> rules2;
            if (push_file2) rules2 = read_file(*push_file2);
            return emit(sadic::run_pushforward(config, rules1, rules2, push_v0));
        }
        if (*cmd_frequencies)
            return emit(sadic::run_frequencies(config, freq_word, freq_dump));
    } catch (const sadic::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
