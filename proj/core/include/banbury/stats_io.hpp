#pragma once
// File formats: statistics bundles (JSON or TSV counts), exclusive bigram
// score tables (TSV) and repeat-theory parameters (JSON).

#include <map>
#include <string>
#include <string_view>

#include "banbury/corpus.hpp"
#include "banbury/repeats.hpp"
#include "banbury/transposition.hpp"

namespace banbury::io {

// Counts gathered from one corpus.  Either table may be all zero when the
// source only carried the other.
struct StatsBundle {
    LetterCounts letter_counts{};
    BigramCounts bigram_counts{};
    // Optional r-gram summary: r -> apparent repeats M_r.
    std::map<int, long long> apparent_repeats;
    std::string source;
    long long size = 0;
    bool circular = false;

    long long letter_total() const;
    long long bigram_total() const;
    bool has_letters() const { return letter_total() > 0; }
    bool has_bigrams() const { return bigram_total() > 0; }

    // Falls back to bigram row marginals when only bigrams are present.
    LetterDistribution letters() const;
    BigramStats bigrams() const;

    // Counts non-negative; when both tables are present the bigram total is
    // the letter total (circular) or one less.
    void validate() const;
};

StatsBundle bundle_from_corpus(std::string_view letters, std::string source, bool circular, int rgram_max_r = 0);

// {"letter_counts": {...}, "bigram_counts": {...}, "rgram_summary": {...}, "meta": {...}}
std::string to_json(const StatsBundle& bundle);
StatsBundle bundle_from_json(std::string_view text);

// One "A\t84" line per letter, one "AB\t12" line per nonzero bigram.
std::string to_tsv(const StatsBundle& bundle);
StatsBundle bundle_from_tsv(std::string_view text);

// JSON when the first non-blank character is '{', TSV otherwise.
StatsBundle parse_stats(std::string_view text);
StatsBundle read_stats_file(const std::string& path);

std::string read_text_file(const std::string& path);

// All 676 "AB\tscore" lines.
std::string to_tsv(const transposition::ExclusiveBigramTable& table);
// Pairs not listed score `fill`.
transposition::ExclusiveBigramTable score_table_from_tsv(std::string_view text, int fill = 0);

std::string to_json(const repeats::RepeatParams& params);
repeats::RepeatParams params_from_json(std::string_view text);

}  // namespace banbury::io
