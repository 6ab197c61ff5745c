#include "banbury/corpus.hpp"

#include <cctype>
#include <string>

namespace banbury {

Letters normalize(std::string_view raw) {
    Letters out;
    out.reserve(raw.size());
    for (char c : raw) {
        auto u = static_cast<unsigned char>(c);
        if (u < 0x80 && std::isalpha(u)) out.push_back(static_cast<char>(std::toupper(u)));
    }
    return out;
}

LetterDistribution LetterDistribution::from_counts(const LetterCounts& counts) {
    LetterDistribution d;
    d.counts_ = counts;
    for (long long c : counts) {
        if (c < 0) throw DataError("letter counts must be non-negative");
        d.total_ += c;
    }
    if (d.total_ == 0) throw EmptyCorpusError();
    for (int i = 0; i < kAlphabetSize; ++i) {
        d.p_[static_cast<std::size_t>(i)] =
            static_cast<double>(counts[static_cast<std::size_t>(i)]) / static_cast<double>(d.total_);
    }
    return d;
}

LetterDistribution LetterDistribution::from_letters(std::string_view letters) {
    return from_counts(count_letters(letters));
}

LetterDistribution LetterDistribution::uniform() {
    LetterCounts ones;
    ones.fill(1);
    return from_counts(ones);
}

double LetterDistribution::coincidence() const {
    double s = 0.0;
    for (double p : p_) s += p * p;
    return s;
}

BigramStats BigramStats::from_letters(std::string_view letters, bool circular) {
    require_letters(letters, "bigram corpus");
    if (letters.size() < 2) throw DataError("bigram statistics need at least two letters");
    BigramCounts counts{};
    const std::size_t n = letters.size();
    const std::size_t pairs = circular ? n : n - 1;
    for (std::size_t i = 0; i < pairs; ++i) {
        int a = letter_index(letters[i]);
        int b = letter_index(letters[(i + 1) % n]);
        ++counts[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    }
    return from_counts(counts);
}

BigramStats BigramStats::from_counts(const BigramCounts& counts) {
    BigramStats s;
    s.counts_ = counts;
    for (const auto& row : counts) {
        for (long long c : row) {
            if (c < 0) throw DataError("bigram counts must be non-negative");
            s.total_ += c;
        }
    }
    if (s.total_ == 0) throw EmptyCorpusError();
    const double total = static_cast<double>(s.total_);
    for (std::size_t a = 0; a < kAlphabetSize; ++a) {
        for (std::size_t b = 0; b < kAlphabetSize; ++b) {
            double p = static_cast<double>(counts[a][b]) / total;
            s.joint_[a][b] = p;
            s.row_[a] += p;
            s.col_[b] += p;
        }
    }
    return s;
}

double BigramStats::transition(int a, int b) const {
    double pa = marginal(a);
    return pa > 0.0 ? joint(a, b) / pa : 0.0;
}

RgramCounts RgramCounts::from_letters(std::string_view letters, int max_r) {
    require_letters(letters, "r-gram corpus");
    if (max_r < 1) throw DomainError("max_r must be at least 1");
    if (letters.empty()) throw EmptyCorpusError();
    if (static_cast<std::size_t>(max_r) > letters.size()) {
        throw DataError("corpus of " + std::to_string(letters.size()) +
                        " letters is shorter than max_r = " + std::to_string(max_r));
    }
    RgramCounts rc;
    rc.letters_ = static_cast<long long>(letters.size());
    // Doubling the text lets every circular r-gram be a contiguous view.
    std::string ring(letters);
    ring.append(letters.substr(0, static_cast<std::size_t>(max_r)));
    const std::string_view view(ring);
    rc.tables_.resize(static_cast<std::size_t>(max_r));
    for (int r = 1; r <= max_r; ++r) {
        auto& table = rc.tables_[static_cast<std::size_t>(r - 1)];
        table.reserve(letters.size());
        for (std::size_t i = 0; i < letters.size(); ++i) {
            ++table[std::string(view.substr(i, static_cast<std::size_t>(r)))];
        }
    }
    return rc;
}

const RgramCounts::Table& RgramCounts::grams(int r) const {
    if (r < 1 || r > max_r()) {
        throw DomainError("r-gram length " + std::to_string(r) + " not tabulated (max_r = " +
                          std::to_string(max_r()) + ")");
    }
    return tables_[static_cast<std::size_t>(r - 1)];
}

long long RgramCounts::count(std::string_view gram) const {
    const auto& table = grams(static_cast<int>(gram.size()));
    auto it = table.find(std::string(gram));
    return it == table.end() ? 0 : it->second;
}

long long RgramCounts::apparent_repeats(int r) const {
    if (r == 0) return letters_ * (letters_ - 1) / 2;
    long long m = 0;
    for (const auto& [gram, s] : grams(r)) m += s * (s - 1) / 2;
    return m;
}

}  // namespace banbury
