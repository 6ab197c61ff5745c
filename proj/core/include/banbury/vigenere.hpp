#pragma once
// Periodic shift cipher: encipher/decipher, integer half-deciban score
// tables, per-column key ranking and the exact posterior over the 26 keys.

#include <array>
#include <string_view>
#include <vector>

#include "banbury/bayes.hpp"
#include "banbury/corpus.hpp"

namespace banbury::vigenere {

// Key letters with A as the null shift: cipher = plain + key, so that
// decode = cipher - key + 1 in A=1 numbering.
class Key {
public:
    explicit Key(Letters letters);

    std::size_t period() const { return letters_.size(); }
    char at(std::size_t i) const { return letters_[i % letters_.size()]; }
    const Letters& letters() const { return letters_; }

private:
    Letters letters_;
};

char encode_letter(char plain, char key);
char decode_letter(char cipher, char key);

Letters encipher(std::string_view plain, const Key& key);
Letters decipher(std::string_view cipher, const Key& key);

// Column i holds letters i, i+period, i+2*period, ...
std::vector<Letters> split_columns(std::string_view cipher, std::size_t period);

enum class ScoreFormula {
    // 20*log10(26 p): the posterior-ratio form.
    TwentySixP,
    // 20*log10(25 p / (1 - p)): key-versus-not-key odds form.
    OddsAgainstRest,
};

// Half-deciban score per plain letter, with multiplicity rows: row m holds
// round(m * raw) rather than m * round(raw).  A zero-probability letter
// scores m * kFloor.
class ColumnScoreTable {
public:
    static constexpr int kFloor = -99;

    static ColumnScoreTable build(const LetterDistribution& dist, int max_mult,
                                  ScoreFormula formula = ScoreFormula::TwentySixP);

    int max_mult() const { return max_mult_; }
    HalfDecibans base(char letter) const { return multiple(1, letter); }
    // Multiplicities above max_mult are rounded from the raw score on demand.
    HalfDecibans multiple(int m, char letter) const;
    // Unrounded 20*log10 factor; -infinity for zero-probability letters.
    double raw(char letter) const { return raw_[static_cast<std::size_t>(letter_index(letter))]; }

private:
    ColumnScoreTable() = default;
    int max_mult_ = 0;
    std::array<double, kAlphabetSize> raw_{};
    std::vector<std::array<int, kAlphabetSize>> rows_;
};

// Decodes the column with `key`, counts each decode letter and adds the
// multiplicity-row entries.
HalfDecibans score_column(std::string_view column, char key, const ColumnScoreTable& table);

struct KeyScore {
    char key;
    HalfDecibans score;
};

// All 26 keys, best first; ties in alphabetical order.
std::vector<KeyScore> rank_keys(std::string_view column, const ColumnScoreTable& table);

// posterior(key) = prod 26 p(decode) / sum over keys of the same product.
std::array<double, kAlphabetSize> key_posterior(std::string_view column, const LetterDistribution& dist);

// sum over keys of prod_i 26 p(decode_i); the evidence for the column model.
double evidence_denominator(std::string_view column, const LetterDistribution& dist);
double log10_evidence_denominator(std::string_view column, const LetterDistribution& dist);

}  // namespace banbury::vigenere
