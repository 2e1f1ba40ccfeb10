#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "sadic/analysis.hpp"
#include "sadic/config.hpp"
#include "sadic/errors.hpp"

#include <string>

using namespace sadic;

namespace {

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("json config: periodic sequence with flags") {
    const char* text = R"({
        "sequence": {
            "type": "periodic",
            "morphisms": [["a -> ab", "b -> a"]],
            "period": [0]
        },
        "depth": 12,
        "eps": 1e-9,
        "format": "structured"
    })";
    AnalysisConfig config = parse_config_json(text);
    CHECK(config.depth == 12);
    CHECK(config.eps == 1e-9);
    CHECK(config.format == OutputFormat::Structured);
    CHECK(config.sequence.is_periodic());
    CHECK(config.sequence.alphabet(0).size() == 2);
}

TEST_CASE("json config: explicit sequence defaults its depth") {
    const char* text = R"({
        "sequence": {
            "type": "explicit",
            "morphisms": ["a -> ab\nb -> a", "a -> ab\nb -> a", "a -> ab\nb -> a"]
        }
    })";
    AnalysisConfig config = parse_config_json(text);
    CHECK_FALSE(config.sequence.is_periodic());
    CHECK(config.depth == 3);
}

TEST_CASE("json config: alternating periodic cycle chains alphabets") {
    // cycle[0]: {x,y} -> {a,b}*, cycle[1]: {a,b} -> {x,y}*.
    const char* text = R"({
        "sequence": {
            "type": "periodic",
            "morphisms": [["x -> ab", "y -> a"], ["a -> xy", "b -> x"]],
            "period": [0, 1]
        },
        "depth": 8
    })";
    AnalysisConfig config = parse_config_json(text);
    CHECK(config.sequence.alphabet(0).letters() == std::vector<std::string>{"a", "b"});
    CHECK(config.sequence.alphabet(1).letters() == std::vector<std::string>{"x", "y"});
    CHECK(config.sequence.alphabet(2).letters() == std::vector<std::string>{"a", "b"});
}

TEST_CASE("json config: malformed inputs carry diagnostics") {
    CHECK_THROWS_AS(parse_config_json("{"), ConfigError);
    CHECK_THROWS_AS(parse_config_json("[]"), ConfigError);
    CHECK_THROWS_AS(parse_config_json("{}"), ConfigError);
    CHECK_THROWS_AS(parse_config_json(R"({"preset": "nope"})"), ConfigError);
    CHECK_THROWS_AS(parse_config_json(R"({"preset": "fibonacci", "depth": 1})"), ConfigError);
    CHECK_THROWS_AS(parse_config_json(R"({"preset": "fibonacci", "eps": -1})"), ConfigError);
    CHECK_THROWS_AS(parse_config_json(R"({"preset": "fibonacci", "format": "xml"})"),
                    ConfigError);
    CHECK_THROWS_AS(
        parse_config_json(R"({"preset": "fibonacci", "sequence": {"morphisms": ["a -> a"]}})"),
        ConfigError);
    // Broken rule text inside a block.
    CHECK_THROWS_AS(parse_config_json(R"({"sequence": {"morphisms": ["a => b"]}})"), ConfigError);
    // Chain mismatch across explicit levels.
    CHECK_THROWS_AS(parse_config_json(R"({
        "sequence": {"type": "explicit", "morphisms": ["a -> ab\nb -> a", "x -> xy\ny -> x"]}
    })"),
                    ConfigError);
    try {
        parse_config_json(R"({"preset": "fibonacci", "depth": 1})");
    } catch (const ConfigError& e) {
        CHECK(contains(e.where(), "depth"));
    }
}

TEST_CASE("every preset builds and validates") {
    for (const auto& name : preset_names()) {
        AnalysisConfig config = preset_config(name);
        CHECK(config.sequence_label == name);
        CHECK_NOTHROW(config.validate());
    }
    CHECK_THROWS_AS(preset_sequence("unknown", 10), ConfigError);
}

TEST_CASE("analyze: fibonacci text report carries the headline facts") {
    AnalysisConfig config = preset_config("fibonacci");
    CommandResult r = run_analyze(config);
    REQUIRE(r.exit_code == 0);
    CHECK(contains(r.out, "certified-growing"));
    CHECK(contains(r.out, "det = -1 (invertible)"));
    CHECK(contains(r.out, "thin: thin"));
    CHECK(contains(r.out, "stabilization level n0: 0"));
    CHECK(contains(r.out, "in [1, 2]"));
}

TEST_CASE("analyze: identity report explains the skipped cones") {
    AnalysisConfig config = preset_config("identity");
    config.depth = 8;
    CommandResult r = run_analyze(config);
    REQUIRE(r.exit_code == 0);
    CHECK(contains(r.out, "not-growing-witness"));
    CHECK(contains(r.out, "cone analysis skipped"));
}

TEST_CASE("analyze: thue-morse is singular at every level yet thin") {
    AnalysisConfig config = preset_config("thue-morse");
    config.depth = 10;
    CommandResult r = run_analyze(config);
    REQUIRE(r.exit_code == 0);
    CHECK(contains(r.out, "det = 0 (singular)"));
    CHECK(contains(r.out, "thin: thin"));
}

TEST_CASE("analyze: structured output is deterministic in-process") {
    for (const auto& name : preset_names()) {
        AnalysisConfig config = preset_config(name);
        config.depth = 8;
        config.format = OutputFormat::Structured;
        CommandResult first = run_analyze(config);
        CommandResult second = run_analyze(config);
        REQUIRE(first.exit_code == 0);
        CHECK(first.out == second.out);
        CHECK(contains(first.out, "sadic.format = analyze.v1"));
    }
}

TEST_CASE("letters: one ray per independent copy") {
    AnalysisConfig config = preset_config("two-copies");
    config.depth = 20;
    CommandResult r = run_letters(config);
    REQUIRE(r.exit_code == 0);
    CHECK(contains(r.out, "c estimate: 2"));
    CHECK(contains(r.out, "ray 0:"));
    CHECK(contains(r.out, "ray 1:"));
    CHECK(contains(r.out, "exact column"));

    AnalysisConfig fib = preset_config("fibonacci");
    CommandResult rf = run_letters(fib);
    CHECK(contains(rf.out, "0.6180339887"));
}

TEST_CASE("cylinder: single letters give a zero-width row") {
    AnalysisConfig config = preset_config("fibonacci");
    config.depth = 20;
    CommandResult r = run_cylinder(config, "a", std::nullopt);
    REQUIRE(r.exit_code == 0);
    CHECK(contains(r.out, "oracle cross-reference"));
}

TEST_CASE("cylinder: exit codes for the error paths") {
    AnalysisConfig config = preset_config("fibonacci");
    config.depth = 20;

    CommandResult bad_symbol = run_cylinder(config, "az", std::nullopt);
    CHECK(bad_symbol.exit_code == 2);

    CommandResult infeasible = run_cylinder(config, "ab", std::string("1, 0"));
    CHECK(infeasible.exit_code == 3);
    CHECK(contains(infeasible.err, "level 2"));

    CommandResult negative = run_cylinder(config, "ab", std::string("-1, 1"));
    CHECK(negative.exit_code == 2);

    AnalysisConfig merged = preset_config("merge-two-copies");
    merged.depth = 10;
    CommandResult ambiguous = run_cylinder(merged, "ab", std::string("0.618034, 0.381966"));
    CHECK(ambiguous.exit_code == 4);
    CHECK(contains(ambiguous.err, "ambiguity"));
}

TEST_CASE("pushforward: mass change and functoriality line") {
    AnalysisConfig config = preset_config("fibonacci");
    CommandResult r = run_pushforward(config, "a -> ab\nb -> a", std::nullopt, std::nullopt);
    REQUIRE(r.exit_code == 0);
    CHECK(contains(r.out, "mass 1.618033989"));
    CHECK(contains(r.out, "need not stay a probability measure"));

    CommandResult two =
        run_pushforward(config, "a -> ab\nb -> a", std::string("a -> ab\nb -> a"), std::nullopt);
    REQUIRE(two.exit_code == 0);
    CHECK(contains(two.out, "functoriality (composite vs two-step): OK"));

    CommandResult erasing = run_pushforward(config, "a -> ab\nb -> ", std::nullopt, std::nullopt);
    CHECK(erasing.exit_code == 2);
    CHECK(contains(erasing.err, "erasing"));
}

TEST_CASE("frequencies: reports exact window frequencies") {
    AnalysisConfig config = preset_config("fibonacci");
    config.depth = 15;
    CommandResult r = run_frequencies(config, "ab", std::nullopt);
    REQUIRE(r.exit_code == 0);
    CHECK(contains(r.out, "frequency of 'ab'"));
    CHECK(contains(r.out, "letter frequencies"));

    CommandResult bad = run_frequencies(config, "zz", std::nullopt);
    CHECK(bad.exit_code == 2);
}

TEST_CASE("frequencies: the expansion budget maps to the resource exit code") {
    AnalysisConfig config = preset_config("thue-morse");
    config.depth = 30; // 2^30 symbols, over the default budget
    CommandResult r = run_frequencies(config, "ab", std::nullopt);
    CHECK(r.exit_code == 5);
    CHECK(contains(r.err, "resource limit"));
}
