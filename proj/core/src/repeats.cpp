#include "banbury/repeats.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>
#include <unordered_map>

namespace banbury::repeats {

namespace {

void require_figure_symbols(std::string_view s) {
    for (char c : s) {
        if (c != 'X' && c != 'O') throw DomainError("repetition figure may only contain X and O");
    }
}

}  // namespace

std::size_t RepetitionFigure::repeats() const {
    return static_cast<std::size_t>(std::count(symbols.begin(), symbols.end(), 'X'));
}

std::vector<int> RepetitionFigure::runs() const {
    std::vector<int> out;
    int run = 0;
    for (char c : symbols) {
        if (c == 'X') {
            ++run;
        } else if (run > 0) {
            out.push_back(run);
            run = 0;
        }
    }
    if (run > 0) out.push_back(run);
    return out;
}

int RepetitionFigure::longest_run() const {
    auto r = runs();
    return r.empty() ? 0 : *std::max_element(r.begin(), r.end());
}

std::string RepetitionFigure::annotated() const {
    std::string out;
    if (leading > 0) out += "^{" + std::to_string(leading) + "}";
    out += symbols;
    if (trailing > 0) out += "^{" + std::to_string(trailing) + "}";
    return out;
}

RepetitionFigure RepetitionFigure::parse(std::string_view text) {
    RepetitionFigure fig;
    auto read_mark = [&](std::size_t& pos) -> int {
        // "^{n}" or "^n"
        ++pos;
        bool braced = pos < text.size() && text[pos] == '{';
        if (braced) ++pos;
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw DomainError("malformed overhang mark in figure");
        int value = std::stoi(std::string(text.substr(start, pos - start)));
        if (braced) {
            if (pos >= text.size() || text[pos] != '}') throw DomainError("unterminated overhang mark in figure");
            ++pos;
        }
        return value;
    };
    std::size_t pos = 0;
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos < text.size() && text[pos] == '^') fig.leading = read_mark(pos);
    while (pos < text.size() && (text[pos] == 'X' || text[pos] == 'O')) fig.symbols.push_back(text[pos++]);
    if (pos < text.size() && text[pos] == '^') fig.trailing = read_mark(pos);
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos != text.size()) throw DomainError("unexpected character in repetition figure: '" +
                                              std::string(1, text[pos]) + "'");
    if (fig.symbols.empty()) throw DomainError("empty repetition figure");
    return fig;
}

RepetitionFigure repetition_figure(std::string_view msg1, std::string_view msg2, int distance) {
    require_letters(msg1, "first message");
    require_letters(msg2, "second message");
    const long long len1 = static_cast<long long>(msg1.size());
    const long long len2 = static_cast<long long>(msg2.size());
    // Overlap in msg1 coordinates.
    const long long begin = std::max<long long>(0, distance);
    const long long end = std::min<long long>(len1, distance + len2);
    if (end <= begin) throw DomainError("messages do not overlap at distance " + std::to_string(distance));

    RepetitionFigure fig;
    fig.symbols.reserve(static_cast<std::size_t>(end - begin));
    for (long long i = begin; i < end; ++i) {
        char a = msg1[static_cast<std::size_t>(i)];
        char b = msg2[static_cast<std::size_t>(i - distance)];
        fig.symbols.push_back(a == b ? 'X' : 'O');
    }
    if (distance > 0) {
        fig.leading = distance;
        fig.leading_owner = Message::First;
    } else if (distance < 0) {
        fig.leading = -distance;
        fig.leading_owner = Message::Second;
    }
    const long long tail1 = len1 - end;
    const long long tail2 = distance + len2 - end;
    if (tail1 > 0) {
        fig.trailing = static_cast<int>(tail1);
        fig.trailing_owner = Message::First;
    } else if (tail2 > 0) {
        fig.trailing = static_cast<int>(tail2);
        fig.trailing_owner = Message::Second;
    }
    return fig;
}

RunCounts count_runs(std::span<const RepetitionFigure> figures, int max_r) {
    if (max_r < 0) throw DomainError("max_r must be non-negative");
    RunCounts rc;
    rc.apparent.assign(static_cast<std::size_t>(max_r) + 1, 0);
    rc.actual.assign(static_cast<std::size_t>(max_r) + 1, 0);
    for (const auto& fig : figures) {
        rc.apparent[0] += static_cast<long long>(fig.overlap());
        for (int run : fig.runs()) {
            if (run <= max_r) ++rc.actual[static_cast<std::size_t>(run)];
            for (int r = 1; r <= std::min(run, max_r); ++r) rc.apparent[static_cast<std::size_t>(r)] += run - r + 1;
        }
    }
    return rc;
}

std::vector<long long> actual_from_apparent(std::span<const long long> apparent) {
    std::vector<long long> actual;
    if (apparent.size() < 3) return actual;
    actual.reserve(apparent.size() - 2);
    for (std::size_t r = 0; r + 2 < apparent.size(); ++r) {
        actual.push_back(apparent[r] - 2 * apparent[r + 1] + apparent[r + 2]);
    }
    return actual;
}

Decibans simple_fit_factor(const RepetitionFigure& figure, double beta) {
    if (!(beta > 0.0 && beta < 1.0)) throw DomainError("beta must lie strictly between 0 and 1");
    const double n = static_cast<double>(figure.repeats());
    const double overlap = static_cast<double>(figure.overlap());
    return Decibans{n * 10.0 * std::log10(25.0 * beta / (1.0 - beta)) +
                    overlap * 10.0 * std::log10(26.0 / 25.0 * (1.0 - beta))};
}

FigureFactor pattern_figure_factor(std::string_view pattern, const RgramCounts& sample) {
    require_figure_symbols(pattern);
    if (pattern.empty()) throw DomainError("empty pattern");
    const int r = static_cast<int>(pattern.size());
    if (r > sample.max_r()) {
        throw DomainError("pattern length " + std::to_string(r) + " exceeds tabulated r-grams (" +
                          std::to_string(sample.max_r()) + ")");
    }
    std::vector<std::size_t> x_pos, o_pos;
    for (std::size_t i = 0; i < pattern.size(); ++i) (pattern[i] == 'X' ? x_pos : o_pos).push_back(i);

    const auto& grams = sample.grams(r);
    // Pairs agreeing on every position of `mask`.
    auto agreeing_pairs = [&](const std::vector<std::size_t>& mask) {
        std::unordered_map<std::string, long long> groups;
        groups.reserve(grams.size());
        std::string key(mask.size(), ' ');
        for (const auto& [gram, count] : grams) {
            for (std::size_t j = 0; j < mask.size(); ++j) key[j] = gram[mask[j]];
            groups[key] += count;
        }
        long long pairs = 0;
        for (const auto& [k, c] : groups) pairs += c * (c - 1) / 2;
        return pairs;
    };

    // Agree on all X positions and differ on all O positions, by
    // inclusion-exclusion over the O positions.
    long long matching = 0;
    const std::size_t subsets = std::size_t{1} << o_pos.size();
    for (std::size_t s = 0; s < subsets; ++s) {
        std::vector<std::size_t> mask = x_pos;
        int bits = 0;
        for (std::size_t j = 0; j < o_pos.size(); ++j) {
            if (s & (std::size_t{1} << j)) {
                mask.push_back(o_pos[j]);
                ++bits;
            }
        }
        long long a = agreeing_pairs(mask);
        matching += (bits % 2 == 0) ? a : -a;
    }

    FigureFactor f;
    const long long n = sample.letters();
    f.total_pairs = n * (n - 1) / 2;
    f.matching_pairs = matching;
    f.null_frequency = std::pow(1.0 / 26.0, static_cast<double>(x_pos.size())) *
                       std::pow(25.0 / 26.0, static_cast<double>(o_pos.size()));
    f.observed_frequency = f.total_pairs > 0 ? static_cast<double>(matching) / static_cast<double>(f.total_pairs) : 0.0;
    f.insufficient = matching == 0;
    f.factor = f.insufficient ? 0.0 : f.observed_frequency / f.null_frequency;
    return f;
}

RepeatParams estimate_params(const RgramCounts& stats, const LetterDistribution& dist, int max_r) {
    if (max_r < 2) throw DomainError("max_r must be at least 2");
    if (stats.max_r() < max_r + 2) {
        throw DomainError("r-gram statistics must cover r = 1.." + std::to_string(max_r + 2) + ", have " +
                          std::to_string(stats.max_r()));
    }
    RepeatParams p;
    p.max_r = max_r;
    p.letters = stats.letters();
    p.beta = dist.coincidence();
    p.apparent.resize(static_cast<std::size_t>(max_r) + 3);
    for (int r = 0; r <= max_r + 2; ++r) p.apparent[static_cast<std::size_t>(r)] = stats.apparent_repeats(r);
    p.pairs = static_cast<double>(p.apparent[0]);
    p.actual = actual_from_apparent(p.apparent);

    const long long non_repeats = p.apparent[0] - p.apparent[1];  // L - M_1 = L h
    if (non_repeats <= 0) {
        throw EstimationError("corpus has no disagreeing pairs (L - M_1 <= 0); cannot estimate repeat rates");
    }
    p.h = static_cast<double>(non_repeats) / p.pairs;
    const double lh = static_cast<double>(non_repeats);
    p.k.resize(static_cast<std::size_t>(max_r) + 1);
    for (int r = 0; r <= max_r; ++r) {
        long long nr = p.actual[static_cast<std::size_t>(r)];
        if (nr <= 0) {
            throw EstimationError("no actual " + std::to_string(r) + "-gram repeats in a corpus of " +
                                  std::to_string(p.letters) + " letters; corpus too small for max_r = " +
                                  std::to_string(max_r));
        }
        p.k[static_cast<std::size_t>(r)] = static_cast<double>(nr) / lh;
    }
    p.k_tail = static_cast<double>(p.apparent[static_cast<std::size_t>(max_r) + 1] -
                                   p.apparent[static_cast<std::size_t>(max_r) + 2]) / lh;
    p.a0 = 1.0 - p.k[0];
    p.nu = -10.0 * std::log10(26.0 * p.k[0] / 25.0);
    p.mu.resize(static_cast<std::size_t>(max_r) + 1);
    for (int r = 0; r <= max_r; ++r) {
        p.mu[static_cast<std::size_t>(r)] =
            10.0 * std::log10(std::pow(26.0, r + 1) * p.k[static_cast<std::size_t>(r)] / 25.0) + (r + 1) * p.nu;
    }
    p.initial_mu_none = p.mu;
    p.initial_mu_some = p.mu;
    return p;
}

Decibans general_fit_score(const RepetitionFigure& figure, const RepeatParams& params) {
    require_figure_symbols(figure.symbols);
    const int longest = figure.longest_run();
    if (longest > params.max_r) {
        throw DomainError("figure has a run of " + std::to_string(longest) + " repeats; parameters tabulate r <= " +
                          std::to_string(params.max_r) + " (need max_r >= " + std::to_string(longest) + ")");
    }
    const auto& initial = figure.leading > 0 ? params.initial_mu_some : params.initial_mu_none;
    double score = -params.nu * static_cast<double>(figure.overlap());
    std::size_t i = 0;
    bool first = true;
    const std::size_t n = figure.symbols.size();
    while (i < n) {
        std::size_t j = i;
        while (j < n && figure.symbols[j] == 'X') ++j;
        const auto run = j - i;
        if (first) {
            score += initial[run];
        } else if (run > 0) {
            score += params.mu[run];
        }
        first = false;
        i = (j < n) ? j + 1 : j;
    }
    return Decibans{score};
}

}  // namespace banbury::repeats
