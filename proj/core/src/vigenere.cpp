#include "banbury/vigenere.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace banbury::vigenere {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void require_column(std::string_view column) {
    if (column.empty()) throw DomainError("column must be nonempty");
    require_letters(column, "column");
}

// Natural-log product of 26 p over the decode of `column` under every key.
std::array<double, kAlphabetSize> log_products(std::string_view column, const LetterDistribution& dist) {
    require_column(column);
    const auto counts = count_letters(column);
    std::array<double, kAlphabetSize> logs{};
    for (int key = 0; key < kAlphabetSize; ++key) {
        double acc = 0.0;
        for (int c = 0; c < kAlphabetSize; ++c) {
            long long n = counts[static_cast<std::size_t>(c)];
            if (n == 0) continue;
            double p = dist[mod26(c - key)];
            if (p <= 0.0) {
                acc = kNegInf;
                break;
            }
            acc += static_cast<double>(n) * std::log(kAlphabetSize * p);
        }
        logs[static_cast<std::size_t>(key)] = acc;
    }
    return logs;
}

double log_sum_exp(const std::array<double, kAlphabetSize>& logs) {
    double top = *std::max_element(logs.begin(), logs.end());
    if (top == kNegInf) {
        throw DataError("degenerate distribution: every key gives the column zero probability");
    }
    double s = 0.0;
    for (double l : logs) s += std::exp(l - top);
    return top + std::log(s);
}

}  // namespace

Key::Key(Letters letters) : letters_(std::move(letters)) {
    if (letters_.empty()) throw DomainError("Vigenere key must be nonempty");
    require_letters(letters_, "Vigenere key");
}

char encode_letter(char plain, char key) {
    if (!is_letter(plain) || !is_letter(key)) throw DomainError("letters must be A-Z");
    return letter_at(letter_index(plain) + letter_index(key));
}

char decode_letter(char cipher, char key) {
    if (!is_letter(cipher) || !is_letter(key)) throw DomainError("letters must be A-Z");
    return letter_at(letter_index(cipher) - letter_index(key));
}

Letters encipher(std::string_view plain, const Key& key) {
    require_letters(plain, "plaintext");
    Letters out(plain.size(), 'A');
    for (std::size_t i = 0; i < plain.size(); ++i) out[i] = encode_letter(plain[i], key.at(i));
    return out;
}

Letters decipher(std::string_view cipher, const Key& key) {
    require_letters(cipher, "ciphertext");
    Letters out(cipher.size(), 'A');
    for (std::size_t i = 0; i < cipher.size(); ++i) out[i] = decode_letter(cipher[i], key.at(i));
    return out;
}

std::vector<Letters> split_columns(std::string_view cipher, std::size_t period) {
    if (period == 0) throw DomainError("period must be positive");
    std::vector<Letters> columns(period);
    for (std::size_t i = 0; i < cipher.size(); ++i) columns[i % period].push_back(cipher[i]);
    return columns;
}

ColumnScoreTable ColumnScoreTable::build(const LetterDistribution& dist, int max_mult, ScoreFormula formula) {
    if (max_mult < 1) throw DomainError("max_mult must be at least 1");
    ColumnScoreTable t;
    t.max_mult_ = max_mult;
    for (int a = 0; a < kAlphabetSize; ++a) {
        double p = dist[a];
        double raw = kNegInf;
        if (p > 0.0) {
            double factor = formula == ScoreFormula::TwentySixP ? kAlphabetSize * p : 25.0 * p / (1.0 - p);
            raw = factor > 0.0 && std::isfinite(factor) ? half_deciban_value(factor) : kNegInf;
        }
        t.raw_[static_cast<std::size_t>(a)] = raw;
    }
    t.rows_.resize(static_cast<std::size_t>(max_mult));
    for (int m = 1; m <= max_mult; ++m) {
        auto& row = t.rows_[static_cast<std::size_t>(m - 1)];
        for (std::size_t a = 0; a < kAlphabetSize; ++a) {
            row[a] = std::isfinite(t.raw_[a]) ? round_half_away(m * t.raw_[a]) : m * kFloor;
        }
    }
    return t;
}

HalfDecibans ColumnScoreTable::multiple(int m, char letter) const {
    if (m < 1) throw DomainError("multiplicity must be at least 1");
    const auto a = static_cast<std::size_t>(letter_index(letter));
    if (m <= max_mult_) return HalfDecibans{rows_[static_cast<std::size_t>(m - 1)][a]};
    return HalfDecibans{std::isfinite(raw_[a]) ? round_half_away(m * raw_[a]) : m * kFloor};
}

HalfDecibans score_column(std::string_view column, char key, const ColumnScoreTable& table) {
    require_column(column);
    std::array<int, kAlphabetSize> decoded{};
    for (char c : column) ++decoded[static_cast<std::size_t>(letter_index(decode_letter(c, key)))];
    HalfDecibans total;
    for (int a = 0; a < kAlphabetSize; ++a) {
        int n = decoded[static_cast<std::size_t>(a)];
        if (n > 0) total += table.multiple(n, letter_at(a));
    }
    return total;
}

std::vector<KeyScore> rank_keys(std::string_view column, const ColumnScoreTable& table) {
    std::vector<KeyScore> ranked;
    ranked.reserve(kAlphabetSize);
    for (int k = 0; k < kAlphabetSize; ++k) {
        char key = letter_at(k);
        ranked.push_back({key, score_column(column, key, table)});
    }
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const KeyScore& a, const KeyScore& b) { return a.score > b.score; });
    return ranked;
}

std::array<double, kAlphabetSize> key_posterior(std::string_view column, const LetterDistribution& dist) {
    const auto logs = log_products(column, dist);
    const double norm = log_sum_exp(logs);
    std::array<double, kAlphabetSize> post{};
    for (std::size_t k = 0; k < kAlphabetSize; ++k) post[k] = std::exp(logs[k] - norm);
    return post;
}

double log10_evidence_denominator(std::string_view column, const LetterDistribution& dist) {
    const auto logs = log_products(column, dist);
    if (*std::max_element(logs.begin(), logs.end()) == kNegInf) return kNegInf;
    return log_sum_exp(logs) / std::log(10.0);
}

double evidence_denominator(std::string_view column, const LetterDistribution& dist) {
    return std::pow(10.0, log10_evidence_denominator(column, dist));
}

}  // namespace banbury::vigenere
