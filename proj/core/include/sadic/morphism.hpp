#pragma once

#include "sadic/alphabet.hpp"
#include "sadic/int_matrix.hpp"
#include "sadic/word.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sadic {

/// A monoid morphism: each letter of the domain alphabet maps to a word
/// over the codomain alphabet, extended to words by concatenation.
///
/// Erasing morphisms (some image empty) are representable; contexts that
/// require non-erasing maps reject them explicitly. The incidence matrix
/// (entry (i,j) = occurrences of codomain letter i in the image of domain
/// letter j) is counted directly from the images at construction.
class Morphism {
public:
    Morphism() = default;

    /// images[j] is the image of domain letter j and must be a word over
    /// `codomain`.
    Morphism(Alphabet domain, Alphabet codomain, std::vector<Word> images);

    static Morphism identity(const Alphabet& alphabet);

    const Alphabet& domain() const { return domain_; }
    const Alphabet& codomain() const { return codomain_; }

    const Word& image(int domain_letter) const;
    const Word& image(const std::string& domain_letter) const;

    bool non_erasing() const { return non_erasing_; }
    bool is_identity() const;

    /// The d' x d occurrence-count matrix; column j sums to |image(j)|.
    const IntMatrix& incidence_matrix() const { return incidence_; }

    bool operator==(const Morphism& other) const;
    bool operator!=(const Morphism& other) const { return !(*this == other); }

    /// Rule-per-line rendering, `letter -> image`.
    std::string to_rules() const;

private:
    Alphabet domain_;
    Alphabet codomain_;
    std::vector<Word> images_;
    IntMatrix incidence_;
    bool non_erasing_ = true;
};

/// Image of `w` under `sigma`, by concatenation of letter images.
/// Throws std::invalid_argument if `w` is not over sigma's domain.
Word apply(const Morphism& sigma, const Word& w);

/// Composition (outer ∘ inner): letters of inner's domain map through
/// inner, then outer. Requires codomain(inner) == domain(outer).
Morphism compose(const Morphism& outer, const Morphism& inner);

/// Parses the rule-per-line text format, e.g.
///
///     a -> ab
///     b -> a
///
/// The domain is the ordered union of left-hand sides. The codomain, when
/// not supplied, is inferred from the images in order of first appearance;
/// in that case images are tokenized per character unless they contain
/// whitespace. Blank lines and lines starting with '#' are skipped.
/// Throws ConfigError with a line diagnostic on malformed input.
Morphism parse_morphism(const std::string& rules_text,
                        std::optional<Alphabet> codomain = std::nullopt);

} // namespace sadic
