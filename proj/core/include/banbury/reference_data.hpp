#pragma once
// Worked-example data: the 1000-letter English count, example ciphertexts
// and the hand-tabulated score entries they were solved with.

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "banbury/corpus.hpp"

namespace banbury::reference {

// Count on 1000 letters of English text (X chosen between real language and
// telegraphese).
LetterCounts english_1000_counts();

// Period-10 Vigenere example, rows joined.  The corrected text swaps the
// N M at the end of the first row; it is the one that decodes cleanly.
std::string_view vigenere_cipher_as_printed();
std::string_view vigenere_cipher();
std::string_view vigenere_key();
std::string_view vigenere_clear();

// Hand-tabulated slide scores in half-decibans, indexed by slide 0..25.
std::array<int, kAlphabetSize> tabulated_slide_scores();

// Subtractor crib examples: cipher, crib and the slide lists as quoted.
std::string_view random_crib_cipher();
std::string_view true_crib_cipher();
std::string_view crib_word();
std::vector<int> random_crib_quoted_slides();
std::vector<int> true_crib_quoted_slides();

// Message pair in depth at distance 8, and its printed repetition figure.
std::string_view depth_first_message();
std::string_view depth_second_message();
std::string_view depth_figure();

// The six exclusive bigram scores quoted for the column pair SATPTW/FASTAU.
std::map<std::string, int> quoted_exclusive_scores();

// 95-letter columnar transposition of German text.  The amended text reads
// NITS for NLTS at the start of the second row.
std::string_view transposition_cipher_as_printed();
std::string_view transposition_cipher();
std::vector<int> transposition_key();

}  // namespace banbury::reference
