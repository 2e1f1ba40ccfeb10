#include "sadic/word.hpp"

#include <sstream>
#include <stdexcept>

namespace sadic {

Word::Word(Alphabet alphabet, std::vector<int32_t> symbols)
    : alphabet_(std::move(alphabet)), symbols_(std::move(symbols)) {
    const int d = alphabet_.size();
    for (int32_t s : symbols_) {
        if (s < 0 || s >= d)
            throw std::invalid_argument("word symbol index out of range");
    }
}

Word Word::empty(Alphabet alphabet) { return Word(std::move(alphabet), {}); }

Word Word::parse(const Alphabet& alphabet, const std::string& text) {
    std::vector<int32_t> symbols;
    if (alphabet.single_char() && text.find_first_of(" \t") == std::string::npos) {
        symbols.reserve(text.size());
        for (char c : text) {
            int idx = alphabet.index_of(std::string(1, c));
            if (idx < 0)
                throw std::invalid_argument("symbol '" + std::string(1, c) +
                                            "' is not in the alphabet");
            symbols.push_back(idx);
        }
    } else {
        std::istringstream in(text);
        std::string tok;
        while (in >> tok) {
            int idx = alphabet.index_of(tok);
            if (idx < 0)
                throw std::invalid_argument("symbol '" + tok + "' is not in the alphabet");
            symbols.push_back(idx);
        }
    }
    return Word(alphabet, std::move(symbols));
}

std::string Word::to_string() const {
    std::string out;
    const bool compact = alphabet_.single_char();
    for (size_t i = 0; i < symbols_.size(); ++i) {
        if (!compact && i > 0) out += ' ';
        out += alphabet_.letter(symbols_[i]);
    }
    return out;
}

Word Word::concat(const Word& other) const {
    if (alphabet_ != other.alphabet_)
        throw std::invalid_argument("cannot concatenate words over different alphabets");
    std::vector<int32_t> s;
    s.reserve(symbols_.size() + other.symbols_.size());
    s.insert(s.end(), symbols_.begin(), symbols_.end());
    s.insert(s.end(), other.symbols_.begin(), other.symbols_.end());
    return Word(alphabet_, std::move(s));
}

bool Word::operator==(const Word& other) const {
    return alphabet_ == other.alphabet_ && symbols_ == other.symbols_;
}

int64_t count_letter(const Word& w, int32_t letter_index) {
    if (letter_index < 0 || letter_index >= w.alphabet().size())
        throw std::invalid_argument("letter index out of range");
    int64_t n = 0;
    for (int32_t s : w.symbols())
        if (s == letter_index) ++n;
    return n;
}

int64_t count_letter(const Word& w, const std::string& x) {
    int idx = w.alphabet().index_of(x);
    if (idx < 0)
        throw std::invalid_argument("letter '" + x + "' is not in the word's alphabet");
    return count_letter(w, idx);
}

int64_t count_occurrences(const Word& w, const Word& u) {
    if (u.is_empty()) throw std::invalid_argument("factor must be nonempty");
    if (w.alphabet() != u.alphabet())
        throw std::invalid_argument("factor alphabet differs from word alphabet");
    const auto& ws = w.symbols();
    const auto& us = u.symbols();
    if (ws.size() < us.size()) return 0;
    const size_t m = us.size();
    const size_t last = ws.size() - m;
    int64_t n = 0;
    for (size_t i = 0; i <= last; ++i) {
        size_t j = 0;
        while (j < m && ws[i + j] == us[j]) ++j;
        if (j == m) ++n;
    }
    return n;
}

} // namespace sadic
