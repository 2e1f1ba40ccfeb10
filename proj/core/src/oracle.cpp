#include "sadic/oracle.hpp"

#include "sadic/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace sadic {

Expander::Expander(DirectiveSequence seq, ExpansionBudget budget)
    : seq_(std::move(seq)), budget_(budget) {
    if (budget_.max_symbols <= 0)
        throw std::invalid_argument("expansion budget must be positive");
}

Int Expander::predicted_length(int level, int letter_index) const {
    if (level == 0) return 1;
    return seq_.telescoped_incidence(0, level).column_sum(letter_index);
}

Word Expander::expand(int level, const std::string& letter) const {
    int idx = seq_.alphabet(level).index_of(letter);
    if (idx < 0)
        throw std::invalid_argument("letter '" + letter + "' is not in the level-" +
                                    std::to_string(level) + " alphabet");
    return expand(level, idx);
}

Word Expander::expand(int level, int letter_index) const {
    if (level < 0 || level > seq_.available_depth())
        throw std::invalid_argument("expansion level out of range");
    const Alphabet& alpha = seq_.alphabet(level);
    if (letter_index < 0 || letter_index >= alpha.size())
        throw std::invalid_argument("letter index out of range");
    Int predicted = predicted_length(level, letter_index);
    if (predicted > budget_.max_symbols)
        throw ResourceLimitError("expansion of level-" + std::to_string(level) + " letter '" +
                                     alpha.letter(letter_index) + "' needs " + predicted.get_str() +
                                     " symbols, over the budget of " +
                                     std::to_string(budget_.max_symbols) +
                                     "; lower the level or raise the budget",
                                 predicted.get_str());
    return budget_.memoize ? expand_memoized(level, letter_index)
                           : expand_streaming(level, letter_index);
}

Word Expander::expand_memoized(int level, int letter_index) const {
    if (level == 0)
        return Word(seq_.alphabet(0), {static_cast<int32_t>(letter_index)});
    {
        std::lock_guard<std::mutex> lock(memo_->mutex);
        auto it = memo_->blocks.find({level, letter_index});
        if (it != memo_->blocks.end()) return it->second;
    }
    // sigma_{[0,n)}(a) = concat over b in sigma_{n-1}(a) of sigma_{[0,n-1)}(b).
    const Word& image = seq_.morphism(level - 1).image(letter_index);
    std::vector<Word> parts;
    parts.reserve(static_cast<size_t>(image.length()));
    int64_t total = 0;
    for (int32_t b : image.symbols()) {
        parts.push_back(expand_memoized(level - 1, b));
        total += parts.back().length();
    }
    std::vector<int32_t> symbols;
    symbols.reserve(static_cast<size_t>(total));
    for (const auto& p : parts)
        symbols.insert(symbols.end(), p.symbols().begin(), p.symbols().end());
    Word block(seq_.alphabet(0), std::move(symbols));
    {
        std::lock_guard<std::mutex> lock(memo_->mutex);
        auto [it, inserted] = memo_->blocks.emplace(std::make_pair(level, letter_index), block);
        return it->second;
    }
}

Word Expander::expand_streaming(int level, int letter_index) const {
    Word w(seq_.alphabet(level), {static_cast<int32_t>(letter_index)});
    for (int k = level - 1; k >= 0; --k) w = apply(seq_.morphism(k), w);
    return w;
}

Word expand(const DirectiveSequence& seq, int level, const std::string& letter,
            const ExpansionBudget& budget) {
    return Expander(seq, budget).expand(level, letter);
}

Rat empirical_frequency(const Word& w, const Word& u) {
    if (u.is_empty()) throw std::invalid_argument("factor must be nonempty");
    if (w.length() < u.length())
        throw std::invalid_argument("sample word is shorter than the factor");
    const int64_t windows = w.length() - u.length() + 1;
    Rat f(count_occurrences(w, u), windows);
    f.canonicalize();
    return f;
}

std::vector<double> perron_frequencies(const IntMatrix& m, int iters, double tol,
                                       int max_exponent) {
    if (!m.is_square()) throw std::invalid_argument("power iteration requires a square matrix");
    const int d = m.rows();
    if (max_exponent <= 0) max_exponent = 2 * d;

    bool primitive = false;
    IntMatrix p = m;
    for (int e = 1; e <= max_exponent; ++e) {
        if (p.all_positive()) { primitive = true; break; }
        if (e < max_exponent) p = p.multiply(m);
    }
    if (!primitive)
        throw NotPrimitiveError("no power up to exponent " + std::to_string(max_exponent) +
                                " is entrywise positive");

    std::vector<double> md(static_cast<size_t>(d) * static_cast<size_t>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            md[static_cast<size_t>(i) * d + j] = m.at(i, j).get_d();

    std::vector<double> v(static_cast<size_t>(d), 1.0 / d);
    std::vector<double> next(static_cast<size_t>(d));
    for (int it = 0; it < iters; ++it) {
        double sum = 0;
        for (int i = 0; i < d; ++i) {
            double s = 0;
            for (int j = 0; j < d; ++j) s += md[static_cast<size_t>(i) * d + j] * v[static_cast<size_t>(j)];
            next[static_cast<size_t>(i)] = s;
            sum += s;
        }
        if (sum <= 0) throw ConvergenceError("power iteration collapsed to zero");
        double dist = 0;
        for (int i = 0; i < d; ++i) {
            next[static_cast<size_t>(i)] /= sum;
            dist += std::fabs(next[static_cast<size_t>(i)] - v[static_cast<size_t>(i)]);
        }
        v.swap(next);
        if (dist < tol) return v;
    }
    throw ConvergenceError("power iteration did not converge in " + std::to_string(iters) +
                           " iterations");
}

} // namespace sadic
