#include "sadic/morphism.hpp"

#include "sadic/errors.hpp"

#include <sstream>
#include <stdexcept>

namespace sadic {

Morphism::Morphism(Alphabet domain, Alphabet codomain, std::vector<Word> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
    if (static_cast<int>(images_.size()) != domain_.size())
        throw std::invalid_argument("morphism needs exactly one image per domain letter");
    for (const auto& img : images_) {
        if (img.alphabet() != codomain_)
            throw std::invalid_argument("morphism image is not over the codomain alphabet");
        if (img.is_empty()) non_erasing_ = false;
    }
    incidence_ = IntMatrix(codomain_.size(), domain_.size());
    for (int j = 0; j < domain_.size(); ++j) {
        for (int32_t s : images_[static_cast<size_t>(j)].symbols()) {
            incidence_.at(s, j) += 1;
        }
    }
}

Morphism Morphism::identity(const Alphabet& alphabet) {
    std::vector<Word> images;
    images.reserve(static_cast<size_t>(alphabet.size()));
    for (int i = 0; i < alphabet.size(); ++i)
        images.emplace_back(alphabet, std::vector<int32_t>{i});
    return Morphism(alphabet, alphabet, std::move(images));
}

const Word& Morphism::image(int domain_letter) const {
    if (domain_letter < 0 || domain_letter >= domain_.size())
        throw std::out_of_range("domain letter index out of range");
    return images_[static_cast<size_t>(domain_letter)];
}

const Word& Morphism::image(const std::string& domain_letter) const {
    int idx = domain_.index_of(domain_letter);
    if (idx < 0)
        throw std::invalid_argument("letter '" + domain_letter + "' is not in the domain");
    return images_[static_cast<size_t>(idx)];
}

bool Morphism::is_identity() const {
    if (domain_ != codomain_) return false;
    for (int j = 0; j < domain_.size(); ++j) {
        const auto& img = images_[static_cast<size_t>(j)];
        if (img.length() != 1 || img[0] != j) return false;
    }
    return true;
}

bool Morphism::operator==(const Morphism& other) const {
    return domain_ == other.domain_ && codomain_ == other.codomain_ && images_ == other.images_;
}

std::string Morphism::to_rules() const {
    std::ostringstream out;
    for (int j = 0; j < domain_.size(); ++j) {
        out << domain_.letter(j) << " -> " << images_[static_cast<size_t>(j)].to_string();
        if (j + 1 < domain_.size()) out << "\n";
    }
    return out.str();
}

Word apply(const Morphism& sigma, const Word& w) {
    if (w.alphabet() != sigma.domain())
        throw std::invalid_argument("word is not over the morphism's domain alphabet");
    int64_t total = 0;
    for (int32_t s : w.symbols()) total += sigma.image(s).length();
    std::vector<int32_t> out;
    out.reserve(static_cast<size_t>(total));
    for (int32_t s : w.symbols()) {
        const auto& img = sigma.image(s).symbols();
        out.insert(out.end(), img.begin(), img.end());
    }
    return Word(sigma.codomain(), std::move(out));
}

Morphism compose(const Morphism& outer, const Morphism& inner) {
    if (inner.codomain() != outer.domain())
        throw std::invalid_argument(
            "cannot compose: inner codomain differs from outer domain");
    std::vector<Word> images;
    images.reserve(static_cast<size_t>(inner.domain().size()));
    for (int j = 0; j < inner.domain().size(); ++j)
        images.push_back(apply(outer, inner.image(j)));
    return Morphism(inner.domain(), outer.codomain(), std::move(images));
}

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

struct RawRule {
    std::string lhs;
    std::string rhs;
    int line;
};

std::vector<RawRule> split_rules(const std::string& text) {
    std::vector<RawRule> rules;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        size_t arrow = t.find("->");
        if (arrow == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno),
                              "expected 'letter -> image', got '" + t + "'");
        std::string lhs = trim(t.substr(0, arrow));
        std::string rhs = trim(t.substr(arrow + 2));
        if (lhs.empty())
            throw ConfigError("line " + std::to_string(lineno), "empty left-hand side");
        rules.push_back({lhs, rhs, lineno});
    }
    if (rules.empty()) throw ConfigError("", "morphism has no rules");
    return rules;
}

} // namespace

Morphism parse_morphism(const std::string& rules_text, std::optional<Alphabet> codomain) {
    auto rules = split_rules(rules_text);

    std::vector<std::string> domain_letters;
    for (const auto& r : rules) domain_letters.push_back(r.lhs);
    Alphabet domain;
    try {
        domain = Alphabet(domain_letters);
    } catch (const std::invalid_argument& e) {
        throw ConfigError("", e.what());
    }

    Alphabet target;
    if (codomain) {
        target = *codomain;
    } else {
        // Infer the codomain letters in order of first appearance.
        std::vector<std::string> seen;
        auto note = [&seen](const std::string& tok) {
            for (const auto& s : seen)
                if (s == tok) return;
            seen.push_back(tok);
        };
        for (const auto& r : rules) {
            if (r.rhs.find_first_of(" \t") != std::string::npos) {
                std::istringstream in(r.rhs);
                std::string tok;
                while (in >> tok) note(tok);
            } else {
                for (char c : r.rhs) note(std::string(1, c));
            }
        }
        if (seen.empty())
            throw ConfigError("", "cannot infer a codomain: every image is empty");
        target = Alphabet(seen);
    }

    std::vector<Word> images;
    images.reserve(rules.size());
    for (const auto& r : rules) {
        try {
            images.push_back(Word::parse(target, r.rhs));
        } catch (const std::invalid_argument& e) {
            throw ConfigError("line " + std::to_string(r.line), e.what());
        }
    }
    return Morphism(std::move(domain), std::move(target), std::move(images));
}

} // namespace sadic
