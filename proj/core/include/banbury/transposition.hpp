#pragma once
// Simple columnar transposition: the cipher, evidence that two columns were
// adjacent in the clear (exclusive bigram scores), the probability that a
// letter ends a column, and the gapped-pattern probability under a letter
// chain.

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "banbury/bayes.hpp"
#include "banbury/corpus.hpp"

namespace banbury::transposition {

// Column read-out order, 1-based: order[0] is the first column read.
class Key {
public:
    explicit Key(std::vector<int> order);

    std::size_t width() const { return order_.size(); }
    const std::vector<int>& order() const { return order_; }

    // "5,11,8,7" or "5 11 8 7".
    static Key parse(std::string_view text);

private:
    std::vector<int> order_;
};

// For a message of length L = D*K + E the first E columns hold D+1 letters.
std::vector<std::size_t> column_lengths(std::size_t length, std::size_t width);

Letters encipher(std::string_view plain, const Key& key);
Letters decipher(std::string_view cipher, const Key& key);

class ExclusiveBigramTable {
public:
    static constexpr int kFloor = -99;

    // round(20 log10(P_ab / (P_a P_b))); kFloor where P_ab is zero.
    static ExclusiveBigramTable from_stats(const BigramStats& stats);
    // Explicit entries ("SF" -> -7); every other pair scores `fill`.
    static ExclusiveBigramTable from_entries(const std::map<std::string, int>& entries, int fill = 0);
    static ExclusiveBigramTable zeros();

    int score(char a, char b) const {
        return scores_[static_cast<std::size_t>(letter_index(a))][static_cast<std::size_t>(letter_index(b))];
    }
    const std::array<std::array<int, kAlphabetSize>, kAlphabetSize>& scores() const { return scores_; }

private:
    ExclusiveBigramTable() = default;
    std::array<std::array<int, kAlphabetSize>, kAlphabetSize> scores_{};
};

// Sum of table[a_i][b_i]: evidence for column b following column a.
HalfDecibans score_column_pair(std::string_view earlier, std::string_view later, const ExclusiveBigramTable& table);

struct AlignmentScan {
    // as_earlier[o]: probe as the earlier column against message[o, o + |probe|).
    std::vector<int> as_earlier;
    // as_later[o]: the window as the earlier column, probe following it.
    std::vector<int> as_later;
    // Offsets at which the window is the probe itself.
    std::vector<bool> excluded;
};

// `probe_offset` marks the probe's own position in the message; when absent
// the first occurrence of the probe (if any) is used.
AlignmentScan scan_alignments(std::string_view probe, std::string_view message, const ExclusiveBigramTable& table,
                              std::optional<std::size_t> probe_offset = std::nullopt);

// f_r / sum f_i for equally likely alternatives.
std::vector<double> alternative_probabilities(std::span<const double> factors);
// Same, from half-deciban scores; excluded entries get probability zero.
std::vector<double> alternative_probabilities(std::span<const int> scores, const std::vector<bool>& excluded = {});

// Probability that the m-th letter (1-based) of a message of length L ends a
// column when the key width is K and every arrangement of long and short
// columns is equally likely.
Rational bottom_of_column_probability(long long length, long long width, long long position);

// A known letter preceded by `gap` unknown letters.  The first element's gap
// is ignored.
struct PatternLetter {
    std::size_t gap = 0;
    char letter = 'A';
};

std::vector<PatternLetter> parse_pattern(std::string_view text);  // "S..T.E" style; '.' is unknown

// prod P_b * prod over adjacent (gap 0) pairs of P_ab / (P_a P_b).
double pattern_probability(std::span<const PatternLetter> pattern, const BigramStats& stats);
// P_b1 * prod (Q^{gap+1})_{b_r b_{r+1}}: exact under the letter chain.
double exact_pattern_probability(std::span<const PatternLetter> pattern, const BigramStats& stats);
// P_a1 q_a1a2 ... q_a(L-1)aL.
double joint_probability(std::string_view letters, const BigramStats& stats);

}  // namespace banbury::transposition
