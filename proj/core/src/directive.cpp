#include "sadic/directive.hpp"

#include "sadic/errors.hpp"

#include <climits>
#include <sstream>
#include <stdexcept>

namespace sadic {

DirectiveSequence DirectiveSequence::explicit_list(std::vector<Morphism> levels) {
    DirectiveSequence seq;
    seq.head_ = std::move(levels);
    seq.truncation_depth_ = static_cast<int>(seq.head_.size());
    seq.validate();
    return seq;
}

DirectiveSequence DirectiveSequence::periodic(std::vector<Morphism> cycle, int truncation_depth) {
    return with_head({}, std::move(cycle), truncation_depth);
}

DirectiveSequence DirectiveSequence::with_head(std::vector<Morphism> head,
                                               std::vector<Morphism> cycle,
                                               int truncation_depth) {
    DirectiveSequence seq;
    seq.head_ = std::move(head);
    seq.cycle_ = std::move(cycle);
    seq.truncation_depth_ = truncation_depth;
    seq.validate();
    return seq;
}

DirectiveSequence DirectiveSequence::prepend(const Morphism& sigma) const {
    if (!sigma.non_erasing())
        throw std::invalid_argument("prolongation requires a non-erasing morphism");
    if (sigma.domain() != alphabet(0))
        throw std::invalid_argument(
            "prolongation morphism domain differs from the level-0 alphabet");
    DirectiveSequence seq;
    seq.head_.reserve(head_.size() + 1);
    seq.head_.push_back(sigma);
    seq.head_.insert(seq.head_.end(), head_.begin(), head_.end());
    seq.cycle_ = cycle_;
    seq.truncation_depth_ = truncation_depth_ + 1;
    seq.validate();
    return seq;
}

void DirectiveSequence::validate() const {
    if (head_.empty() && cycle_.empty())
        throw std::invalid_argument("directive sequence needs at least one morphism");
    if (truncation_depth_ <= 0)
        throw std::invalid_argument("truncation depth must be positive");
    if (cycle_.empty() && truncation_depth_ > static_cast<int>(head_.size()))
        throw std::invalid_argument("truncation depth exceeds the explicit level list");
    const int chain_check = cycle_.empty()
                                ? static_cast<int>(head_.size())
                                : static_cast<int>(head_.size() + 2 * cycle_.size());
    for (int n = 0; n < chain_check; ++n) {
        const Morphism& m = morphism(n);
        if (!m.non_erasing())
            throw std::invalid_argument("level " + std::to_string(n) +
                                        " morphism is erasing; directive sequences require "
                                        "non-erasing morphisms");
        if (n >= 1 && morphism(n - 1).domain() != m.codomain())
            throw std::invalid_argument(
                "alphabet chain broken between levels " + std::to_string(n - 1) + " and " +
                std::to_string(n) +
                ": domain(sigma_" + std::to_string(n - 1) + ") != codomain(sigma_" +
                std::to_string(n) + ")");
    }
}

int DirectiveSequence::available_depth() const {
    return cycle_.empty() ? truncation_depth_ : INT_MAX;
}

int DirectiveSequence::clamp_depth(int requested) const {
    return std::min(requested, available_depth());
}

const Morphism& DirectiveSequence::morphism(int level) const {
    if (level < 0) throw std::invalid_argument("negative level");
    if (level < static_cast<int>(head_.size())) return head_[static_cast<size_t>(level)];
    if (cycle_.empty())
        throw std::invalid_argument("level " + std::to_string(level) +
                                    " is beyond the explicit sequence (depth " +
                                    std::to_string(truncation_depth_) + ")");
    const size_t k = (static_cast<size_t>(level) - head_.size()) % cycle_.size();
    return cycle_[k];
}

const Alphabet& DirectiveSequence::alphabet(int level) const {
    if (level == 0) return morphism(0).codomain();
    return morphism(level - 1).domain();
}

Morphism DirectiveSequence::telescope(int m, int n) const {
    if (m < 0 || m > n) throw std::invalid_argument("telescope needs 0 <= m <= n");
    if (n > available_depth())
        throw std::invalid_argument("telescope end exceeds the available depth");
    if (m == n) return Morphism::identity(alphabet(n));
    Morphism result = morphism(m);
    for (int k = m + 1; k < n; ++k) result = compose(result, morphism(k));
    return result;
}

IntMatrix DirectiveSequence::telescoped_incidence(int m, int n) const {
    if (m < 0 || m > n) throw std::invalid_argument("telescope needs 0 <= m <= n");
    if (n > available_depth())
        throw std::invalid_argument("telescope end exceeds the available depth");
    if (m == n) return IntMatrix::identity(alphabet(n).size());
    if (n == m + 1) return morphism(m).incidence_matrix();
    {
        std::lock_guard<std::mutex> lock(memo_->mutex);
        auto it = memo_->telescopes.find({m, n});
        if (it != memo_->telescopes.end()) return it->second;
    }
    IntMatrix result = telescoped_incidence(m, n - 1).multiply(morphism(n - 1).incidence_matrix());
    {
        std::lock_guard<std::mutex> lock(memo_->mutex);
        memo_->telescopes.emplace(std::make_pair(m, n), result);
    }
    return result;
}

Int min_image_length(const DirectiveSequence& seq, int n) {
    if (n < 0) throw std::invalid_argument("negative level");
    if (n == 0) return 1;
    return seq.telescoped_incidence(0, n).min_column_sum();
}

std::string to_string(GrowthStatus s) {
    switch (s) {
        case GrowthStatus::CertifiedGrowing: return "certified-growing";
        case GrowthStatus::HeuristicallyGrowing: return "heuristically-growing";
        case GrowthStatus::Unknown: return "unknown";
        case GrowthStatus::NotGrowingWitness: return "not-growing-witness";
    }
    return "unknown";
}

namespace {

/// Looks for a pinned letter in a periodic sequence: a letter whose image
/// around one full cycle is a single letter, lying on a cycle of the
/// induced partial map. Its telescoped length then never changes.
bool find_pinned_letter(const DirectiveSequence& seq, int* out_level, std::string* out_letter) {
    const int offset = seq.head_size();
    const int p = seq.cycle_size();
    const IntMatrix period = seq.telescoped_incidence(offset, offset + p);
    const Alphabet& alpha = seq.alphabet(offset);
    const int d = alpha.size();
    // single[j] = i when the cycle maps letter j to the single letter i.
    std::vector<int> single(static_cast<size_t>(d), -1);
    for (int j = 0; j < d; ++j) {
        if (period.column_sum(j) != 1) continue;
        for (int i = 0; i < d; ++i) {
            if (period.at(i, j) == 1) { single[static_cast<size_t>(j)] = i; break; }
        }
    }
    for (int start = 0; start < d; ++start) {
        int cur = start;
        for (int steps = 0; steps <= d; ++steps) {
            cur = single[static_cast<size_t>(cur)];
            if (cur < 0) break;
            if (cur == start) {
                *out_level = offset;
                *out_letter = alpha.letter(start);
                return true;
            }
        }
    }
    return false;
}

/// Certificate window for a periodic sequence: a telescoped matrix over
/// one window that is entrywise positive, or failing that has every column
/// sum >= 2. Either kind recurs every period, and each recurrence at least
/// doubles the minimal telescoped length below it.
bool find_growth_window(const DirectiveSequence& seq, int depth, int* out_start, int* out_end,
                        std::string* out_kind) {
    const int offset = seq.head_size();
    const int p = seq.cycle_size();
    const int d_max = 12 * p + 4 * seq.alphabet(offset).size();
    const int longest = std::min(depth > 0 ? depth : d_max, d_max);
    for (int start = offset; start < offset + p; ++start) {
        for (int len = 1; len <= longest; ++len) {
            IntMatrix m = seq.telescoped_incidence(start, start + len);
            if (m.all_positive() && m.min_column_sum() >= 2) {
                *out_start = start;
                *out_end = start + len;
                *out_kind = "positive";
                return true;
            }
            if (m.min_column_sum() >= 2) {
                *out_start = start;
                *out_end = start + len;
                *out_kind = "column-sums>=2";
                return true;
            }
        }
    }
    return false;
}

} // namespace

GrowthVerdict check_everywhere_growing(const DirectiveSequence& seq, int depth, const Int& threshold) {
    if (depth < 0) throw std::invalid_argument("negative depth");
    if (depth > seq.available_depth())
        throw std::invalid_argument("depth exceeds the available sequence depth");

    GrowthVerdict verdict;
    verdict.beta_values.reserve(static_cast<size_t>(depth) + 1);
    for (int n = 0; n <= depth; ++n) verdict.beta_values.push_back(min_image_length(seq, n));

    if (seq.is_periodic()) {
        int level = -1;
        std::string letter;
        if (find_pinned_letter(seq, &level, &letter)) {
            verdict.status = GrowthStatus::NotGrowingWitness;
            verdict.witness = "letter '" + letter + "' at level " + std::to_string(level) +
                              " maps to a single letter around the cycle";
            verdict.witness_level = level;
            return verdict;
        }
        int wstart = -1, wend = -1;
        std::string kind;
        if (find_growth_window(seq, depth, &wstart, &wend, &kind)) {
            verdict.status = GrowthStatus::CertifiedGrowing;
            verdict.witness = kind + " telescoped window [" + std::to_string(wstart) + "," +
                              std::to_string(wend) + ")";
            verdict.witness_level = wstart;
            return verdict;
        }
    }

    bool nondecreasing = true;
    for (size_t i = 1; i < verdict.beta_values.size(); ++i) {
        if (verdict.beta_values[i] < verdict.beta_values[i - 1]) { nondecreasing = false; break; }
    }
    if (nondecreasing && !verdict.beta_values.empty() && verdict.beta_values.back() >= threshold) {
        verdict.status = GrowthStatus::HeuristicallyGrowing;
        verdict.witness = "beta nondecreasing with beta(" + std::to_string(depth) +
                          ") = " + verdict.beta_values.back().get_str() +
                          " >= " + threshold.get_str();
        verdict.witness_level = depth;
        return verdict;
    }

    verdict.status = GrowthStatus::Unknown;
    verdict.witness = "no certificate found up to depth " + std::to_string(depth);
    return verdict;
}

std::vector<LevelInvertibility> check_invertible_levels(const DirectiveSequence& seq, int depth) {
    if (depth > seq.available_depth())
        throw std::invalid_argument("depth exceeds the available sequence depth");
    std::vector<LevelInvertibility> out;
    out.reserve(static_cast<size_t>(depth));
    for (int n = 0; n < depth; ++n) {
        LevelInvertibility row;
        row.level = n;
        const IntMatrix& m = seq.morphism(n).incidence_matrix();
        if (!m.is_square()) {
            row.square = false;
            row.invertible = false;
            row.reason = "non-square";
        } else {
            row.determinant = m.determinant();
            row.invertible = row.determinant != 0;
        }
        out.push_back(std::move(row));
    }
    return out;
}

} // namespace sadic
