#pragma once

#include "sadic/directive.hpp"
#include "sadic/numeric.hpp"
#include "sadic/word.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace sadic {

/// Guard for word expansion. Predicted lengths are checked against
/// max_symbols before any symbol is materialized.
struct ExpansionBudget {
    int64_t max_symbols = 10'000'000;
    bool memoize = true;
};

/// Expands telescoped letter images into explicit words over the level-0
/// alphabet. With memoization on, each (level, letter) block is
/// materialized once and shared; expansions of different letters may then
/// run concurrently. With memoization off, expansion runs level by level
/// holding at most two consecutive words, which is the cheap mode for one
/// very long word.
class Expander {
public:
    Expander(DirectiveSequence seq, ExpansionBudget budget = {});

    /// sigma_0 ∘ ... ∘ sigma_{n-1}(a); the single-letter word for n == 0.
    /// Throws ResourceLimitError (with the predicted length) if the
    /// expansion would exceed the budget.
    Word expand(int level, const std::string& letter) const;
    Word expand(int level, int letter_index) const;

    /// Exact predicted length: the letter's column sum of the telescoped
    /// incidence matrix.
    Int predicted_length(int level, int letter_index) const;

    const DirectiveSequence& sequence() const { return seq_; }
    const ExpansionBudget& budget() const { return budget_; }

private:
    Word expand_memoized(int level, int letter_index) const;
    Word expand_streaming(int level, int letter_index) const;

    DirectiveSequence seq_;
    ExpansionBudget budget_;

    struct Memo {
        std::mutex mutex;
        std::map<std::pair<int, int>, Word> blocks;
    };
    std::shared_ptr<Memo> memo_ = std::make_shared<Memo>();
};

/// One-shot convenience wrapper around Expander.
Word expand(const DirectiveSequence& seq, int level, const std::string& letter,
            const ExpansionBudget& budget = {});

/// Sliding-window estimate of the frequency of `u` in `w`:
/// occurrences / (|w| - |u| + 1), exact. Requires |w| >= |u| >= 1.
Rat empirical_frequency(const Word& w, const Word& u);

/// Simplex-normalized dominant eigenvector of a primitive square matrix by
/// power iteration from the uniform vector (deterministic). Primitivity is
/// checked by testing entrywise positivity of powers up to `max_exponent`
/// (default 2*dim when <= 0). Throws NotPrimitiveError if no inspected
/// power is positive, ConvergenceError if the successive-iterate L1
/// distance does not fall below `tol` within `iters` steps.
std::vector<double> perron_frequencies(const IntMatrix& m, int iters = 20000, double tol = 1e-13,
                                       int max_exponent = 0);

} // namespace sadic
