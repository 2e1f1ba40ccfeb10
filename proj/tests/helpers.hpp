#pragma once

#include "sadic/config.hpp"
#include "sadic/directive.hpp"
#include "sadic/morphism.hpp"

#include <random>
#include <string>
#include <vector>

namespace sadic::testing {

inline Morphism fib_morphism() { return parse_morphism("a -> ab\nb -> a"); }
inline Morphism tm_morphism() { return parse_morphism("a -> ab\nb -> ba"); }

inline DirectiveSequence fib_seq(int depth = 30) { return preset_sequence("fibonacci", depth); }
inline DirectiveSequence tm_seq(int depth = 30) { return preset_sequence("thue-morse", depth); }

inline Word word(const Alphabet& alpha, const std::string& text) {
    return Word::parse(alpha, text);
}

/// Random alphabet of the given size over single letters a, b, c, ...
inline Alphabet random_alphabet(std::mt19937& rng, int max_size) {
    std::uniform_int_distribution<int> size_dist(1, max_size);
    const int d = size_dist(rng);
    std::vector<std::string> letters;
    for (int i = 0; i < d; ++i) letters.emplace_back(1, static_cast<char>('a' + i));
    return Alphabet(letters);
}

/// Random morphism with nonempty images (lengths 1..max_len).
inline Morphism random_morphism(std::mt19937& rng, const Alphabet& domain,
                                const Alphabet& codomain, int max_len) {
    std::uniform_int_distribution<int> len_dist(1, max_len);
    std::uniform_int_distribution<int> letter_dist(0, codomain.size() - 1);
    std::vector<Word> images;
    for (int j = 0; j < domain.size(); ++j) {
        std::vector<int32_t> symbols(static_cast<size_t>(len_dist(rng)));
        for (auto& s : symbols) s = letter_dist(rng);
        images.emplace_back(codomain, std::move(symbols));
    }
    return Morphism(domain, codomain, std::move(images));
}

inline Word random_word(std::mt19937& rng, const Alphabet& alpha, int max_len) {
    std::uniform_int_distribution<int> len_dist(0, max_len);
    std::uniform_int_distribution<int> letter_dist(0, alpha.size() - 1);
    std::vector<int32_t> symbols(static_cast<size_t>(len_dist(rng)));
    for (auto& s : symbols) s = letter_dist(rng);
    return Word(alpha, std::move(symbols));
}

} // namespace sadic::testing
