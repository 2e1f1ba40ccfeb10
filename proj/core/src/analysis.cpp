#include "sadic/analysis.hpp"

#include "sadic/errors.hpp"
#include "sadic/oracle.hpp"

#include <fstream>
#include <functional>
#include <sstream>

namespace sadic {

namespace {

std::string dec_vec(const RatVec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += decimal_string(v[i]);
    }
    return s + ")";
}

std::string exact_vec(const RatVec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += rational_string(v[i]);
    }
    return s + ")";
}

std::string plain_dec_vec(const RatVec& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += " ";
        s += decimal_string(v[i]);
    }
    return s;
}

std::string plain_exact_vec(const RatVec& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += " ";
        s += rational_string(v[i]);
    }
    return s;
}

std::string alphabet_list(const Alphabet& alpha) {
    std::string s;
    for (int i = 0; i < alpha.size(); ++i) {
        if (i) s += " ";
        s += alpha.letter(i);
    }
    return s;
}

std::string generator_kind(const DirectiveSequence& seq) {
    if (!seq.is_periodic()) return "explicit";
    if (seq.head_size() == 0) return "periodic";
    return "head+periodic";
}

void emit_header(std::ostringstream& out, const char* kind, const AnalysisConfig& config) {
    out << "sadic.format = " << kind << ".v1\n";
    out << "sequence = " << config.sequence_label << "\n";
    out << "generator = " << generator_kind(config.sequence) << "\n";
    out << "alphabet0 = " << alphabet_list(config.sequence.alphabet(0)) << "\n";
    out << "depth = " << config.depth << "\n";
    out << "eps = " << decimal_string(config.eps) << "\n";
}

/// Collapses consecutive equal per-level lines into "levels i..j: body".
void emit_level_runs(std::ostringstream& out, const std::vector<std::string>& bodies) {
    size_t i = 0;
    while (i < bodies.size()) {
        size_t j = i;
        while (j + 1 < bodies.size() && bodies[j + 1] == bodies[i]) ++j;
        if (i == j)
            out << "  level " << i << ": " << bodies[i] << "\n";
        else
            out << "  levels " << i << ".." << j << ": " << bodies[i] << "\n";
        i = j + 1;
    }
}

RatVec parse_vector(const std::string& text, int expected_size) {
    std::string normalized = text;
    for (auto& c : normalized)
        if (c == ',' || c == '(' || c == ')') c = ' ';
    std::istringstream in(normalized);
    RatVec v;
    std::string tok;
    while (in >> tok) v.push_back(parse_rational(tok));
    if (static_cast<int>(v.size()) != expected_size)
        throw std::invalid_argument("vector needs " + std::to_string(expected_size) +
                                    " entries, got " + std::to_string(v.size()));
    return v;
}

/// Default letter vector: the probability-normalized extreme ray, unique
/// only when the level-0 cone estimate is one-dimensional.
RatVec default_letter_vector(const AnalysisConfig& config) {
    const auto& seq = config.sequence;
    ConeDimEstimate est =
        estimate_cone_dim(seq, 0, seq.clamp_depth(config.depth), config.eps);
    if (est.c_estimate != 1)
        throw ConfigError("v0", "the level-0 cone estimate is " + std::to_string(est.c_estimate) +
                                    "-dimensional; supply an explicit letter vector with --v0");
    return est.clusters[static_cast<size_t>(est.extreme[0])].representative;
}

LiftResult lift_or_fail(const AnalysisConfig& config, const RatVec& v0, CommandResult* result,
                        std::ostringstream& out) {
    LiftResult lift = unique_tower_from_letters(config.sequence, v0, config.depth, config.eps);
    if (lift.ambiguity) {
        const auto& amb = *lift.ambiguity;
        out << "ambiguous lift at level " << amb.level << ": " << amb.detail << "\n";
        result->exit_code = 4;
        result->err = "ambiguity: " + amb.detail;
        throw amb; // unwound by the guard below; exit code already set
    }
    return lift;
}

CommandResult guarded(const std::function<void(CommandResult&, std::ostringstream&)>& body) {
    CommandResult result;
    std::ostringstream out;
    try {
        body(result, out);
    } catch (const AmbiguityReport&) {
        // exit code and message already recorded by lift_or_fail
    } catch (const ConfigError& e) {
        result.exit_code = 2;
        result.err = std::string("config error: ") + e.what();
    } catch (const std::invalid_argument& e) {
        result.exit_code = 2;
        result.err = std::string("invalid input: ") + e.what();
    } catch (const InfeasibleError& e) {
        result.exit_code = 3;
        result.err = std::string("infeasible: ") + e.what() + " (level " +
                     std::to_string(e.level()) + ")";
    } catch (const ResourceLimitError& e) {
        result.exit_code = 5;
        result.err = std::string("resource limit: ") + e.what();
    } catch (const std::exception& e) {
        result.exit_code = 1;
        result.err = std::string("error: ") + e.what();
    }
    result.out = out.str();
    return result;
}

} // namespace

AnalyzeReport analyze(const AnalysisConfig& config) {
    config.validate();
    const auto& seq = config.sequence;
    AnalyzeReport report;
    report.growth = check_everywhere_growing(seq, config.depth, config.growth_threshold);
    report.invertibility = check_invertible_levels(seq, config.depth);
    if (report.growth.status == GrowthStatus::NotGrowingWitness) {
        report.cones_skip_reason =
            "cone analysis skipped: the sequence is not everywhere growing (" +
            report.growth.witness + "), so level cones do not shrink";
    } else {
        report.cones = check_thin(seq, config.depth, config.eps);
    }
    return report;
}

namespace {

void render_analyze_text(std::ostringstream& out, const AnalyzeReport& report,
                         const AnalysisConfig& config) {
    const auto& seq = config.sequence;
    out << "sequence: " << config.sequence_label << " (" << generator_kind(seq)
        << ", level-0 alphabet {" << alphabet_list(seq.alphabet(0)) << "})\n";
    out << "depth: " << config.depth << ", eps: " << decimal_string(config.eps)
        << ", growth threshold: " << config.growth_threshold.get_str() << "\n\n";

    out << "growth: " << to_string(report.growth.status) << "\n";
    out << "  witness: " << report.growth.witness << "\n";
    out << "  beta_-(n), n = 0.." << config.depth << ":";
    for (const auto& b : report.growth.beta_values) out << " " << b.get_str();
    out << "\n\n";

    out << "level invertibility (n < " << config.depth << "):\n";
    std::vector<std::string> inv_lines;
    for (const auto& row : report.invertibility) {
        if (!row.square)
            inv_lines.push_back("non-square (not invertible)");
        else
            inv_lines.push_back("det = " + row.determinant.get_str() +
                                (row.invertible ? " (invertible)" : " (singular)"));
    }
    emit_level_runs(out, inv_lines);
    out << "\n";

    if (!report.cones) {
        out << report.cones_skip_reason << "\n";
        return;
    }
    const ConeReport& cones = *report.cones;
    out << "cone dimension estimates:\n";
    std::vector<std::string> cone_lines;
    for (const auto& lvl : cones.levels) {
        std::string line = "c = " + std::to_string(lvl.c_estimate) +
                           (lvl.converged ? " (converged)" : " (not converged)") + ", rays:";
        for (const auto& ray : lvl.extreme_rays()) line += " " + dec_vec(ray);
        cone_lines.push_back(std::move(line));
    }
    emit_level_runs(out, cone_lines);
    out << "thin: " << to_string(cones.thin);
    if (cones.thin == ThinVerdict::NotThinWitness)
        out << " (levels " << cones.witness_levels.first << " and " << cones.witness_levels.second
            << " disagree)";
    out << "\n";
    out << "stabilization level n0: ";
    if (cones.stabilization_level) out << *cones.stabilization_level;
    else out << "undetermined";
    out << "\n";
    out << "ergodic measure count e(X): in [" << cones.e_bounds.first << ", "
        << cones.e_bounds.second << "]\n";
    out << "\nnote: finite-depth estimates are evidence, not proof; constancy of c_n is exact\n"
           "when every level matrix is invertible and growth is certified.\n";
}

void render_analyze_structured(std::ostringstream& out, const AnalyzeReport& report,
                               const AnalysisConfig& config) {
    emit_header(out, "analyze", config);
    out << "growth.status = " << to_string(report.growth.status) << "\n";
    out << "growth.witness = " << report.growth.witness << "\n";
    out << "growth.beta.count = " << report.growth.beta_values.size() << "\n";
    for (size_t i = 0; i < report.growth.beta_values.size(); ++i)
        out << "growth.beta[" << i << "] = " << report.growth.beta_values[i].get_str() << "\n";

    out << "invertibility.count = " << report.invertibility.size() << "\n";
    for (const auto& row : report.invertibility) {
        const std::string key = "invertibility[" + std::to_string(row.level) + "]";
        out << key << ".square = " << (row.square ? "true" : "false") << "\n";
        if (row.square) out << key << ".determinant = " << row.determinant.get_str() << "\n";
        out << key << ".invertible = " << (row.invertible ? "true" : "false") << "\n";
        if (!row.reason.empty()) out << key << ".reason = " << row.reason << "\n";
    }

    out << "cones.present = " << (report.cones ? "true" : "false") << "\n";
    if (!report.cones) {
        out << "cones.skip_reason = " << report.cones_skip_reason << "\n";
        return;
    }
    const ConeReport& cones = *report.cones;
    out << "cones.thin = " << to_string(cones.thin) << "\n";
    if (cones.thin == ThinVerdict::NotThinWitness)
        out << "cones.witness_levels = " << cones.witness_levels.first << " "
            << cones.witness_levels.second << "\n";
    out << "cones.stabilization = "
        << (cones.stabilization_level ? std::to_string(*cones.stabilization_level)
                                      : std::string("undetermined"))
        << "\n";
    out << "cones.e.lower = " << cones.e_bounds.first << "\n";
    out << "cones.e.upper = " << cones.e_bounds.second << "\n";
    out << "cones.levels.count = " << cones.levels.size() << "\n";
    for (const auto& lvl : cones.levels) {
        const std::string key = "cones.level[" + std::to_string(lvl.level) + "]";
        out << key << ".c = " << lvl.c_estimate << "\n";
        out << key << ".converged = " << (lvl.converged ? "true" : "false") << "\n";
        auto rays = lvl.extreme_rays();
        out << key << ".rays.count = " << rays.size() << "\n";
        for (size_t r = 0; r < rays.size(); ++r) {
            out << key << ".ray[" << r << "].decimal = " << plain_dec_vec(rays[r]) << "\n";
            out << key << ".ray[" << r << "].exact = " << plain_exact_vec(rays[r]) << "\n";
        }
    }
}

} // namespace

CommandResult run_analyze(const AnalysisConfig& config) {
    return guarded([&](CommandResult&, std::ostringstream& out) {
        AnalyzeReport report = analyze(config);
        if (config.format == OutputFormat::Structured)
            render_analyze_structured(out, report, config);
        else
            render_analyze_text(out, report, config);
    });
}

CommandResult run_letters(const AnalysisConfig& config) {
    return guarded([&](CommandResult&, std::ostringstream& out) {
        config.validate();
        const auto& seq = config.sequence;
        ConeDimEstimate est =
            estimate_cone_dim(seq, 0, seq.clamp_depth(config.depth), config.eps);
        if (config.format == OutputFormat::Structured) {
            emit_header(out, "letters", config);
            out << "c = " << est.c_estimate << "\n";
            out << "converged = " << (est.converged ? "true" : "false") << "\n";
            out << "rays.count = " << est.extreme.size() << "\n";
            for (size_t r = 0; r < est.extreme.size(); ++r) {
                const auto& cluster = est.clusters[static_cast<size_t>(est.extreme[r])];
                out << "ray[" << r << "].decimal = " << plain_dec_vec(cluster.representative)
                    << "\n";
                out << "ray[" << r << "].exact_member = "
                    << plain_exact_vec(cluster.canonical_member) << "\n";
                out << "ray[" << r << "].cluster_size = " << cluster.size << "\n";
            }
            return;
        }
        out << "sequence: " << config.sequence_label << "\n";
        out << "level-0 letter cone approximation, swept to depth "
            << seq.clamp_depth(config.depth) << ":\n";
        out << "c estimate: " << est.c_estimate
            << (est.converged ? " (converged)" : " (not converged)") << "\n";
        out << "extreme rays (candidate ergodic letter-frequency vectors):\n";
        for (size_t r = 0; r < est.extreme.size(); ++r) {
            const auto& cluster = est.clusters[static_cast<size_t>(est.extreme[r])];
            out << "  ray " << r << ": " << dec_vec(cluster.representative) << "\n";
            out << "    exact column: " << exact_vec(cluster.canonical_member) << " (cluster of "
                << cluster.size << ")\n";
        }
    });
}

CommandResult run_cylinder(const AnalysisConfig& config, const std::string& word_text,
                           const std::optional<std::string>& v0_text,
                           const std::optional<std::string>& dump_tower_path) {
    return guarded([&](CommandResult& result, std::ostringstream& out) {
        config.validate();
        const auto& seq = config.sequence;
        const Word w = Word::parse(seq.alphabet(0), word_text);
        if (w.is_empty()) throw std::invalid_argument("cylinder word must be nonempty");

        RatVec v0 = v0_text ? parse_vector(*v0_text, seq.alphabet(0).size())
                            : default_letter_vector(config);
        const bool structured = config.format == OutputFormat::Structured;
        LiftResult lift = lift_or_fail(config, v0, &result, out);
        MeasureTower tower = std::move(*lift.tower);

        if (dump_tower_path) {
            std::ofstream dump(*dump_tower_path);
            if (!dump) throw ConfigError("", "cannot open " + *dump_tower_path);
            dump << tower.export_text();
        }

        if (structured) {
            emit_header(out, "cylinder", config);
            out << "word = " << w.to_string() << "\n";
            out << "v0.exact = " << plain_exact_vec(zeta(tower, 0)) << "\n";
            out << "v0.adjustment = " << decimal_string(lift.v0_adjustment) << "\n";
        } else {
            out << "cylinder [" << w.to_string() << "] on " << config.sequence_label
                << ", letter vector " << dec_vec(zeta(tower, 0)) << "\n";
            out << "  n | lower | point | upper | width\n";
        }

        int rows = 0;
        std::optional<CylinderEstimate> deepest;
        for (int n = 0; n <= tower.depth(); ++n) {
            CylinderEstimate est;
            try {
                est = cylinder_measure(tower, w, n, config.budget);
            } catch (const ResourceLimitError& e) {
                if (structured)
                    out << "table.truncated_at = " << n << "\n";
                else
                    out << "  (stopped at n = " << n << ": " << e.what() << ")\n";
                break;
            }
            if (structured) {
                const std::string key = "row[" + std::to_string(n) + "]";
                out << key << ".lower.exact = " << rational_string(est.lower) << "\n";
                out << key << ".point.exact = " << rational_string(est.point) << "\n";
                out << key << ".upper.exact = " << rational_string(est.upper) << "\n";
                out << key << ".error.exact = " << rational_string(est.error_bound) << "\n";
                out << key << ".lower = " << decimal_string(est.lower) << "\n";
                out << key << ".point = " << decimal_string(est.point) << "\n";
                out << key << ".upper = " << decimal_string(est.upper) << "\n";
            } else {
                out << "  " << n << " | " << decimal_string(est.lower) << " | "
                    << decimal_string(est.point) << " | " << decimal_string(est.upper) << " | "
                    << decimal_string(est.upper - est.lower) << "\n";
            }
            deepest = est;
            ++rows;
        }
        if (structured) out << "table.rows = " << rows << "\n";

        // Brute-force cross-reference on the deepest affordable expansion.
        int ref_level = -1;
        Expander probe(seq, ExpansionBudget{config.budget, false});
        for (int r = seq.clamp_depth(config.depth + 5); r >= 1; --r) {
            if (probe.predicted_length(r, 0) <= config.budget &&
                probe.predicted_length(r, 0) >= w.length()) {
                ref_level = r;
                break;
            }
        }
        if (ref_level > 0) {
            Word sample = probe.expand(ref_level, 0);
            Rat mass = total_mass(tower);
            Rat freq = empirical_frequency(sample, w) * mass;
            if (structured) {
                out << "oracle.level = " << ref_level << "\n";
                out << "oracle.samples = " << sample.length() << "\n";
                out << "oracle.frequency = " << decimal_string(freq) << "\n";
                out << "oracle.frequency.exact = " << rational_string(freq) << "\n";
            } else {
                out << "oracle cross-reference: frequency " << decimal_string(freq)
                    << " from the level-" << ref_level << " expansion (" << sample.length()
                    << " symbols, rescaled to tower mass " << decimal_string(mass) << ")\n";
                if (deepest)
                    out << "  deepest interval: [" << decimal_string(deepest->lower) << ", "
                        << decimal_string(deepest->upper) << "]\n";
            }
        }
    });
}

CommandResult run_pushforward(const AnalysisConfig& config, const std::string& rules1,
                              const std::optional<std::string>& rules2,
                              const std::optional<std::string>& v0_text) {
    return guarded([&](CommandResult& result, std::ostringstream& out) {
        config.validate();
        const auto& seq = config.sequence;
        Morphism inner = parse_morphism(rules1);
        if (!inner.non_erasing())
            throw std::invalid_argument(
                "pushforward morphism is erasing; the induced map on measures needs every "
                "letter image nonempty");
        RatVec v0 = v0_text ? parse_vector(*v0_text, seq.alphabet(0).size())
                            : default_letter_vector(config);
        LiftResult lift = lift_or_fail(config, v0, &result, out);
        MeasureTower tower = std::move(*lift.tower);
        MeasureTower pushed = pushforward(inner, tower);

        std::string rules_inline = inner.to_rules();
        for (auto& c : rules_inline)
            if (c == '\n') c = ';';

        const bool structured = config.format == OutputFormat::Structured;
        if (structured) {
            emit_header(out, "pushforward", config);
            out << "morphism = " << rules_inline << "\n";
            out << "old.vector.exact = " << plain_exact_vec(zeta(tower, 0)) << "\n";
            out << "old.mass = " << decimal_string(total_mass(tower)) << "\n";
            out << "old.mass.exact = " << rational_string(total_mass(tower)) << "\n";
            out << "new.vector.exact = " << plain_exact_vec(zeta(pushed, 0)) << "\n";
            out << "new.mass = " << decimal_string(total_mass(pushed)) << "\n";
            out << "new.mass.exact = " << rational_string(total_mass(pushed)) << "\n";
        } else {
            out << "pushforward along:\n" << inner.to_rules() << "\n";
            out << "old letter vector: " << dec_vec(zeta(tower, 0)) << ", mass "
                << decimal_string(total_mass(tower)) << "\n";
            out << "new letter vector: " << dec_vec(zeta(pushed, 0)) << ", mass "
                << decimal_string(total_mass(pushed)) << "\n";
            if (total_mass(tower) == 1 && total_mass(pushed) != 1)
                out << "note: a probability measure need not stay a probability measure under "
                       "pushforward\n";
        }

        if (rules2) {
            Morphism outer = parse_morphism(*rules2, std::nullopt);
            if (outer.domain() != inner.codomain()) {
                // Retry against the inner codomain: the inferred alphabet of
                // the second file may list the same letters in another order.
                outer = parse_morphism(*rules2, inner.codomain());
            }
            MeasureTower two_step = pushforward(outer, pushed);
            MeasureTower composite = pushforward(compose(outer, inner), tower);
            const bool ok = zeta(two_step, 0) == zeta(composite, 0) &&
                            total_mass(two_step) == total_mass(composite);
            if (structured) {
                out << "functoriality = " << (ok ? "ok" : "FAILED") << "\n";
                out << "composite.vector.exact = " << plain_exact_vec(zeta(composite, 0)) << "\n";
            } else {
                out << "functoriality (composite vs two-step): " << (ok ? "OK" : "FAILED")
                    << "\n";
            }
            if (!ok) result.exit_code = 1;
        }
    });
}

CommandResult run_frequencies(const AnalysisConfig& config, const std::string& word_text,
                              const std::optional<std::string>& dump_path) {
    return guarded([&](CommandResult&, std::ostringstream& out) {
        config.validate();
        const auto& seq = config.sequence;
        const Word w = Word::parse(seq.alphabet(0), word_text);
        if (w.is_empty()) throw std::invalid_argument("word must be nonempty");

        Expander expander(seq, ExpansionBudget{config.budget, false});
        const Word sample = expander.expand(config.depth, 0);
        if (sample.length() < w.length())
            throw std::invalid_argument("the level-" + std::to_string(config.depth) +
                                        " expansion is shorter than the word");
        if (dump_path) {
            std::ofstream dump(*dump_path);
            if (!dump) throw ConfigError("", "cannot open " + *dump_path);
            dump << sample.to_string() << "\n";
        }

        const Rat freq = empirical_frequency(sample, w);
        const Alphabet& alpha = seq.alphabet(0);
        if (config.format == OutputFormat::Structured) {
            emit_header(out, "frequencies", config);
            out << "word = " << w.to_string() << "\n";
            out << "sample.level = " << config.depth << "\n";
            out << "sample.length = " << sample.length() << "\n";
            out << "frequency = " << decimal_string(freq) << "\n";
            out << "frequency.exact = " << rational_string(freq) << "\n";
            for (int i = 0; i < alpha.size(); ++i) {
                Word letter(alpha, {i});
                Rat f = empirical_frequency(sample, letter);
                out << "letter[" << alpha.letter(i) << "] = " << decimal_string(f) << "\n";
                out << "letter[" << alpha.letter(i) << "].exact = " << rational_string(f) << "\n";
            }
        } else {
            out << "sample: expansion of the first level-" << config.depth << " letter, "
                << sample.length() << " symbols\n";
            out << "frequency of '" << w.to_string() << "': " << decimal_string(freq) << " ("
                << rational_string(freq) << ")\n";
            out << "letter frequencies:\n";
            for (int i = 0; i < alpha.size(); ++i) {
                Word letter(alpha, {i});
                Rat f = empirical_frequency(sample, letter);
                out << "  " << alpha.letter(i) << ": " << decimal_string(f) << " ("
                    << rational_string(f) << ")\n";
            }
        }
    });
}

} // namespace sadic
