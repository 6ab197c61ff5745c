#pragma once
// Text normalization and the letter, bigram and r-gram statistics that the
// scorers are built from.  All statistics are immutable once constructed.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "banbury/alphabet.hpp"

namespace banbury {

using LetterCounts = std::array<long long, kAlphabetSize>;
using BigramCounts = std::array<std::array<long long, kAlphabetSize>, kAlphabetSize>;

class EmptyCorpusError : public DataError {
public:
    EmptyCorpusError() : DataError("empty corpus: no letters A-Z after normalization") {}
};

// Uppercases ASCII letters and drops every other byte (including non-ASCII).
Letters normalize(std::string_view raw);

class LetterDistribution {
public:
    static LetterDistribution from_counts(const LetterCounts& counts);
    static LetterDistribution from_letters(std::string_view letters);
    static LetterDistribution uniform();

    double operator[](int index) const { return p_[static_cast<std::size_t>(index)]; }
    double of(char letter) const { return p_[static_cast<std::size_t>(letter_index(letter))]; }
    const std::array<double, kAlphabetSize>& probabilities() const { return p_; }
    const LetterCounts& counts() const { return counts_; }
    long long total() const { return total_; }

    // Probability that two independent letters agree, sum of p^2.  Always
    // >= 1/26, with equality only for the uniform distribution.
    double coincidence() const;

private:
    LetterDistribution() = default;
    std::array<double, kAlphabetSize> p_{};
    LetterCounts counts_{};
    long long total_ = 0;
};

// Joint frequencies of adjacent letter pairs.  Row marginals P_a are the
// frequencies of a as the first letter of a pair; for a circular corpus these
// coincide with the column marginals and with the letter frequencies.
class BigramStats {
public:
    static BigramStats from_letters(std::string_view letters, bool circular);
    static BigramStats from_counts(const BigramCounts& counts);

    double joint(int a, int b) const { return joint_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
    double joint(char a, char b) const { return joint(letter_index(a), letter_index(b)); }
    double marginal(int a) const { return row_[static_cast<std::size_t>(a)]; }
    double marginal(char a) const { return marginal(letter_index(a)); }
    double column_marginal(int b) const { return col_[static_cast<std::size_t>(b)]; }
    // q_ab = P_ab / P_a; zero when P_a is zero.
    double transition(int a, int b) const;

    const BigramCounts& counts() const { return counts_; }
    long long total() const { return total_; }

private:
    BigramStats() = default;
    BigramCounts counts_{};
    std::array<std::array<double, kAlphabetSize>, kAlphabetSize> joint_{};
    std::array<double, kAlphabetSize> row_{};
    std::array<double, kAlphabetSize> col_{};
    long long total_ = 0;
};

// Occurrence counts S_{b,r} of every r-gram b, r = 1..max_r, over a corpus
// written round a circle so that every position starts an r-gram of every
// length.
class RgramCounts {
public:
    using Table = std::unordered_map<std::string, long long>;

    static RgramCounts from_letters(std::string_view letters, int max_r);

    int max_r() const { return static_cast<int>(tables_.size()); }
    long long letters() const { return letters_; }
    const Table& grams(int r) const;
    long long count(std::string_view gram) const;

    // Apparent r-gram repeats M_r = sum_b S(S-1)/2: the number of unordered
    // pairs of distinct positions whose r-grams agree.  M_0 is the number of
    // pairs, N(N-1)/2.
    long long apparent_repeats(int r) const;

private:
    RgramCounts() = default;
    std::vector<Table> tables_;
    long long letters_ = 0;
};

}  // namespace banbury
