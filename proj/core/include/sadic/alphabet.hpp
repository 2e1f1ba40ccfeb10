#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace sadic {

/// An ordered finite set of letters. Letters are short strings so that
/// level alphabets of any size can be named ("a", "b", ... or "a1", "a2",
/// ...). The ordering is fixed at construction and is the indexing used by
/// every vector and matrix downstream.
///
/// Copies share the underlying data; an Alphabet is immutable after
/// construction and safe to share across threads.
class Alphabet {
public:
    Alphabet() = default;

    /// Throws std::invalid_argument on an empty list, an empty letter, or
    /// duplicate letters.
    explicit Alphabet(std::vector<std::string> letters);

    /// Convenience: each character of `letters` becomes a one-char letter.
    static Alphabet from_chars(const std::string& letters);

    int size() const { return data_ ? static_cast<int>(data_->letters.size()) : 0; }
    const std::string& letter(int index) const;
    const std::vector<std::string>& letters() const;

    /// Index of the letter, or -1 if absent.
    int index_of(const std::string& letter) const;
    bool contains(const std::string& letter) const { return index_of(letter) >= 0; }

    /// True iff every letter is a single character (affects word rendering).
    bool single_char() const { return data_ && data_->single_char; }

    /// Content equality, with a shared-data fast path.
    bool operator==(const Alphabet& other) const;
    bool operator!=(const Alphabet& other) const { return !(*this == other); }

private:
    struct Data {
        std::vector<std::string> letters;
        std::unordered_map<std::string, int> index;
        bool single_char = true;
    };
    std::shared_ptr<const Data> data_;
};

} // namespace sadic
