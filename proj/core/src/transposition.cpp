#include "banbury/transposition.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numeric>

#include "banbury/markov.hpp"

namespace banbury::transposition {

Key::Key(std::vector<int> order) : order_(std::move(order)) {
    if (order_.empty()) throw DomainError("transposition key must be nonempty");
    std::vector<int> sorted = order_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] != static_cast<int>(i) + 1) {
            throw DomainError("transposition key must be a permutation of 1.." + std::to_string(order_.size()));
        }
    }
}

Key Key::parse(std::string_view text) {
    std::vector<int> order;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isdigit(static_cast<unsigned char>(text[i]))) {
            int v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) v = v * 10 + (text[i++] - '0');
            order.push_back(v);
        } else if (text[i] == ',' || std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
        } else {
            throw DomainError("malformed transposition key: '" + std::string(text) + "'");
        }
    }
    return Key(std::move(order));
}

std::vector<std::size_t> column_lengths(std::size_t length, std::size_t width) {
    if (width == 0) throw DomainError("key width must be positive");
    const std::size_t d = length / width;
    const std::size_t e = length - d * width;
    std::vector<std::size_t> lengths(width, d);
    for (std::size_t c = 0; c < e; ++c) ++lengths[c];
    return lengths;
}

Letters encipher(std::string_view plain, const Key& key) {
    require_letters(plain, "plaintext");
    const std::size_t k = key.width();
    Letters out;
    out.reserve(plain.size());
    for (int col : key.order()) {
        for (std::size_t i = static_cast<std::size_t>(col - 1); i < plain.size(); i += k) out.push_back(plain[i]);
    }
    return out;
}

Letters decipher(std::string_view cipher, const Key& key) {
    require_letters(cipher, "ciphertext");
    const std::size_t k = key.width();
    const auto lengths = column_lengths(cipher.size(), k);
    Letters out(cipher.size(), 'A');
    std::size_t pos = 0;
    for (int col : key.order()) {
        const auto c = static_cast<std::size_t>(col - 1);
        for (std::size_t row = 0; row < lengths[c]; ++row) out[row * k + c] = cipher[pos++];
    }
    return out;
}

ExclusiveBigramTable ExclusiveBigramTable::from_stats(const BigramStats& stats) {
    ExclusiveBigramTable t;
    for (int a = 0; a < kAlphabetSize; ++a) {
        for (int b = 0; b < kAlphabetSize; ++b) {
            const double pab = stats.joint(a, b);
            const double pa = stats.marginal(a);
            const double pb = stats.column_marginal(b);
            int s = kFloor;
            if (pab > 0.0 && pa > 0.0 && pb > 0.0) s = half_decibans_from_factor(pab / (pa * pb)).value;
            t.scores_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = s;
        }
    }
    return t;
}

ExclusiveBigramTable ExclusiveBigramTable::from_entries(const std::map<std::string, int>& entries, int fill) {
    ExclusiveBigramTable t;
    for (auto& row : t.scores_) row.fill(fill);
    for (const auto& [pair, score] : entries) {
        if (pair.size() != 2 || !is_letter(pair[0]) || !is_letter(pair[1])) {
            throw DataError("bigram table key must be two letters A-Z, got '" + pair + "'");
        }
        t.scores_[static_cast<std::size_t>(letter_index(pair[0]))][static_cast<std::size_t>(letter_index(pair[1]))] = score;
    }
    return t;
}

ExclusiveBigramTable ExclusiveBigramTable::zeros() { return from_entries({}, 0); }

HalfDecibans score_column_pair(std::string_view earlier, std::string_view later, const ExclusiveBigramTable& table) {
    if (earlier.size() != later.size()) {
        throw DomainError("column lengths differ: " + std::to_string(earlier.size()) + " vs " +
                          std::to_string(later.size()));
    }
    require_letters(earlier, "column");
    require_letters(later, "column");
    HalfDecibans total;
    for (std::size_t i = 0; i < earlier.size(); ++i) total += HalfDecibans{table.score(earlier[i], later[i])};
    return total;
}

AlignmentScan scan_alignments(std::string_view probe, std::string_view message, const ExclusiveBigramTable& table,
                              std::optional<std::size_t> probe_offset) {
    if (probe.empty()) throw DomainError("probe must be nonempty");
    if (probe.size() > message.size()) throw DomainError("probe longer than message");
    if (!probe_offset) {
        auto found = message.find(probe);
        if (found != std::string_view::npos) probe_offset = found;
    }
    const std::size_t count = message.size() - probe.size() + 1;
    AlignmentScan scan;
    scan.as_earlier.reserve(count);
    scan.as_later.reserve(count);
    scan.excluded.assign(count, false);
    for (std::size_t o = 0; o < count; ++o) {
        const auto window = message.substr(o, probe.size());
        scan.as_earlier.push_back(score_column_pair(probe, window, table).value);
        scan.as_later.push_back(score_column_pair(window, probe, table).value);
        if (probe_offset && *probe_offset == o) scan.excluded[o] = true;
    }
    return scan;
}

std::vector<double> alternative_probabilities(std::span<const double> factors) {
    double total = 0.0;
    for (double f : factors) {
        if (!(f >= 0.0)) throw DomainError("factors must be non-negative");
        total += f;
    }
    if (total <= 0.0) throw DomainError("factors sum to zero");
    std::vector<double> out;
    out.reserve(factors.size());
    for (double f : factors) out.push_back(f / total);
    return out;
}

std::vector<double> alternative_probabilities(std::span<const int> scores, const std::vector<bool>& excluded) {
    int top = std::numeric_limits<int>::min();
    for (std::size_t i = 0; i < scores.size(); ++i) {
        if (i < excluded.size() && excluded[i]) continue;
        top = std::max(top, scores[i]);
    }
    std::vector<double> factors(scores.size(), 0.0);
    for (std::size_t i = 0; i < scores.size(); ++i) {
        if (i < excluded.size() && excluded[i]) continue;
        // Relative to the best score, to keep the powers in range.
        factors[i] = std::pow(10.0, (scores[i] - top) / 20.0);
    }
    return alternative_probabilities(std::span<const double>(factors));
}

namespace {

Rational binomial(long long n, long long k) {
    if (n < 0 || k < 0 || k > n) return Rational(0);
    k = std::min(k, n - k);
    boost::multiprecision::cpp_int num = 1;
    boost::multiprecision::cpp_int den = 1;
    for (long long i = 1; i <= k; ++i) {
        num *= n - k + i;
        den *= i;
    }
    return Rational(num / den);
}

}  // namespace

Rational bottom_of_column_probability(long long length, long long width, long long position) {
    if (width < 1) throw DomainError("key width must be at least 1");
    if (position < 1 || position > length) {
        throw DomainError("position must lie in 1.." + std::to_string(length));
    }
    const long long d = length / width;
    const long long e = length - d * width;
    const Rational arrangements = binomial(width, e);
    Rational ways = 0;
    if (d == 0) {
        // Only the e long columns hold a letter; the m-th letter ends column w
        // when w is long and exactly m - 1 of the first w - 1 columns are long.
        for (long long w = position; w <= width; ++w) ways += binomial(w - 1, position - 1) * binomial(width - w, e - position);
        return ways / arrangements;
    }
    // w columns ending exactly at letter m: (m - D w) of them long.
    const long long w_lo = (position + d) / (d + 1);  // ceil(m / (D + 1))
    const long long w_hi = std::min(position / d, width);
    for (long long w = w_lo; w <= w_hi; ++w) {
        ways += binomial(w, position - d * w) * binomial(width - w, e - position + d * w);
    }
    return ways / arrangements;
}

std::vector<PatternLetter> parse_pattern(std::string_view text) {
    std::vector<PatternLetter> out;
    std::size_t gap = 0;
    for (char c : text) {
        if (c == '.' || c == '?') {
            ++gap;
        } else if (is_letter(c)) {
            out.push_back({gap, c});
            gap = 0;
        } else {
            throw DomainError("pattern may contain only A-Z and '.', got '" + std::string(1, c) + "'");
        }
    }
    if (out.empty()) throw DomainError("pattern has no known letters");
    return out;
}

double pattern_probability(std::span<const PatternLetter> pattern, const BigramStats& stats) {
    if (pattern.empty()) throw DomainError("pattern must be nonempty");
    double p = 1.0;
    for (std::size_t r = 0; r < pattern.size(); ++r) {
        const double pb = stats.marginal(pattern[r].letter);
        if (pb <= 0.0) throw DataError(std::string("letter ") + pattern[r].letter + " has zero frequency");
        p *= pb;
        if (r > 0 && pattern[r].gap == 0) {
            const char a = pattern[r - 1].letter;
            const char b = pattern[r].letter;
            p *= stats.joint(a, b) / (stats.marginal(a) * pb);
        }
    }
    return p;
}

double exact_pattern_probability(std::span<const PatternLetter> pattern, const BigramStats& stats) {
    if (pattern.empty()) throw DomainError("pattern must be nonempty");
    const auto q = markov::TransitionMatrix::from_bigrams(stats);
    double p = stats.marginal(pattern[0].letter);
    if (p <= 0.0) throw DataError(std::string("letter ") + pattern[0].letter + " has zero frequency");
    for (std::size_t r = 1; r < pattern.size(); ++r) {
        const auto t = markov::power(q.q(), static_cast<int>(pattern[r].gap) + 1);
        p *= t[static_cast<std::size_t>(letter_index(pattern[r - 1].letter))]
              [static_cast<std::size_t>(letter_index(pattern[r].letter))];
    }
    return p;
}

double joint_probability(std::string_view letters, const BigramStats& stats) {
    if (letters.empty()) throw DomainError("letters must be nonempty");
    require_letters(letters, "plain language");
    double p = stats.marginal(letters[0]);
    for (std::size_t i = 1; i < letters.size(); ++i) {
        p *= stats.transition(letter_index(letters[i - 1]), letter_index(letters[i]));
    }
    return p;
}

}  // namespace banbury::transposition
