#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace banbury {

inline constexpr int kAlphabetSize = 26;

// Letters are carried as uppercase ASCII strings; arithmetic is done on
// zero-based indices (A=0 .. Z=25).  The traditional numbering A=1 .. Z=26
// is the same residue class shifted by one, so "Z is 26 or 0" holds for both.
using Letters = std::string;

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

constexpr bool is_letter(char c) { return c >= 'A' && c <= 'Z'; }

constexpr int letter_index(char c) { return c - 'A'; }

constexpr char letter_at(int index) {
    int r = index % kAlphabetSize;
    if (r < 0) r += kAlphabetSize;
    return static_cast<char>('A' + r);
}

constexpr int mod26(int v) {
    int r = v % kAlphabetSize;
    return r < 0 ? r + kAlphabetSize : r;
}

// 1-based numbering used in the hand-computed tables (A=1, ..., Z=26).
constexpr int letter_number(char c) { return letter_index(c) + 1; }

// Throws DomainError if `s` contains anything other than A-Z.
void require_letters(std::string_view s, std::string_view what);

std::array<long long, kAlphabetSize> count_letters(std::string_view letters);

}  // namespace banbury
