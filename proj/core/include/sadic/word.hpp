#pragma once

#include "sadic/alphabet.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sadic {

/// A finite word over a fixed alphabet, stored as letter indices.
/// Immutable after construction.
class Word {
public:
    Word() = default;

    /// Word from letter indices. Validates each index against the alphabet.
    Word(Alphabet alphabet, std::vector<int32_t> symbols);

    /// The empty word over the given alphabet.
    static Word empty(Alphabet alphabet);

    /// Parses a rendered word: concatenated characters when every letter of
    /// the alphabet is a single character, whitespace-separated letters
    /// otherwise. Throws std::invalid_argument on a symbol outside the
    /// alphabet.
    static Word parse(const Alphabet& alphabet, const std::string& text);

    const Alphabet& alphabet() const { return alphabet_; }
    int64_t length() const { return static_cast<int64_t>(symbols_.size()); }
    bool is_empty() const { return symbols_.empty(); }
    int32_t operator[](int64_t i) const { return symbols_[static_cast<size_t>(i)]; }
    const std::vector<int32_t>& symbols() const { return symbols_; }
    const std::string& letter_at(int64_t i) const { return alphabet_.letter(symbols_[static_cast<size_t>(i)]); }

    /// Inverse of parse: concatenated for single-char alphabets, space
    /// separated otherwise.
    std::string to_string() const;

    Word concat(const Word& other) const;

    bool operator==(const Word& other) const;
    bool operator!=(const Word& other) const { return !(*this == other); }

private:
    Alphabet alphabet_;
    std::vector<int32_t> symbols_;
};

/// Number of occurrences of the letter `x` in `w`. Throws
/// std::invalid_argument if `x` is not a letter of w's alphabet.
int64_t count_letter(const Word& w, const std::string& x);
int64_t count_letter(const Word& w, int32_t letter_index);

/// Number of (possibly overlapping) occurrences of the factor `u` in `w`.
/// Throws std::invalid_argument if `u` is empty or the alphabets differ.
int64_t count_occurrences(const Word& w, const Word& u);

} // namespace sadic
