#include "banbury/alphabet.hpp"

namespace banbury {

void require_letters(std::string_view s, std::string_view what) {
    for (char c : s) {
        if (!is_letter(c)) {
            throw DomainError(std::string(what) + ": expected letters A-Z, got '" +
                              std::string(1, c) + "'");
        }
    }
}

std::array<long long, kAlphabetSize> count_letters(std::string_view letters) {
    std::array<long long, kAlphabetSize> counts{};
    for (char c : letters) {
        if (is_letter(c)) ++counts[letter_index(c)];
    }
    return counts;
}

}  // namespace banbury
