#include "sadic/alphabet.hpp"

#include <stdexcept>

namespace sadic {

Alphabet::Alphabet(std::vector<std::string> letters) {
    if (letters.empty()) throw std::invalid_argument("alphabet must have at least one letter");
    auto data = std::make_shared<Data>();
    data->letters = std::move(letters);
    data->index.reserve(data->letters.size());
    for (size_t i = 0; i < data->letters.size(); ++i) {
        const auto& s = data->letters[i];
        if (s.empty()) throw std::invalid_argument("alphabet letter must be nonempty");
        if (!data->index.emplace(s, static_cast<int>(i)).second)
            throw std::invalid_argument("duplicate letter in alphabet: " + s);
        if (s.size() != 1) data->single_char = false;
    }
    data_ = std::move(data);
}

Alphabet Alphabet::from_chars(const std::string& letters) {
    std::vector<std::string> v;
    v.reserve(letters.size());
    for (char c : letters) v.emplace_back(1, c);
    return Alphabet(std::move(v));
}

const std::string& Alphabet::letter(int index) const {
    if (!data_ || index < 0 || index >= size())
        throw std::out_of_range("letter index out of range");
    return data_->letters[static_cast<size_t>(index)];
}

const std::vector<std::string>& Alphabet::letters() const {
    static const std::vector<std::string> empty;
    return data_ ? data_->letters : empty;
}

int Alphabet::index_of(const std::string& letter) const {
    if (!data_) return -1;
    auto it = data_->index.find(letter);
    return it == data_->index.end() ? -1 : it->second;
}

bool Alphabet::operator==(const Alphabet& other) const {
    if (data_ == other.data_) return true;
    if (!data_ || !other.data_) return false;
    return data_->letters == other.data_->letters;
}

} // namespace sadic
