#pragma once
// Evidence for two messages being in depth ("fitting") at a given distance,
// read off the pattern of agreements between the aligned cipher texts.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "banbury/bayes.hpp"
#include "banbury/corpus.hpp"

namespace banbury::repeats {

class EstimationError : public DataError {
public:
    using DataError::DataError;
};

enum class Message { None, First, Second };

// X where the aligned letters agree, O where they differ.  The overhangs
// record how many letters of which message stick out at either end.
struct RepetitionFigure {
    std::string symbols;
    int leading = 0;
    Message leading_owner = Message::None;
    int trailing = 0;
    Message trailing_owner = Message::None;

    std::size_t overlap() const { return symbols.size(); }
    std::size_t repeats() const;
    // Lengths of the maximal X runs, left to right.
    std::vector<int> runs() const;
    int longest_run() const;
    // "^{8}XOO...X^{11}" (overhang marks only when nonzero).
    std::string annotated() const;

    // Accepts the annotated form or a bare X/O string.
    static RepetitionFigure parse(std::string_view text);
};

// msg2's first letter sits under msg1[distance]; a negative distance puts
// msg1's first letter under msg2[-distance].
RepetitionFigure repetition_figure(std::string_view msg1, std::string_view msg2, int distance);

// Counts the X/O patterns of length >= r in a set of figures:
// apparent[r] = number of windows of r consecutive X, r = 0..max_r
// (apparent[0] = total symbols), actual[r] = maximal runs of exactly r X.
struct RunCounts {
    std::vector<long long> apparent;
    std::vector<long long> actual;
};
RunCounts count_runs(std::span<const RepetitionFigure> figures, int max_r);

// N_r = M_r - 2 M_{r+1} + M_{r+2}, for r = 0 .. apparent.size() - 3.
std::vector<long long> actual_from_apparent(std::span<const long long> apparent);

// Independent-letters theory: 26*beta per X and (26/25)(1-beta) per unit of
// overlap relative to an X-free figure, i.e.
//   n * 10 log10(25 beta / (1 - beta)) + N * 10 log10((26/25)(1 - beta)).
Decibans simple_fit_factor(const RepetitionFigure& figure, double beta);

struct FigureFactor {
    double factor = 0.0;
    // Matching pairs / all pairs of sample r-grams.
    double observed_frequency = 0.0;
    // (1/26)^#X (25/26)^#O.
    double null_frequency = 0.0;
    long long matching_pairs = 0;
    long long total_pairs = 0;
    // No matching pair in the sample.
    bool insufficient = false;
};

// Frequency of a fixed repetition pattern (e.g. OXXXXO) among all pairs of
// r-grams of the sample, divided by its frequency for wrong fits.
FigureFactor pattern_figure_factor(std::string_view pattern, const RgramCounts& sample);

struct RepeatParams {
    int max_r = 0;
    long long letters = 0;
    // L = N(N-1)/2.
    double pairs = 0.0;
    // M_0 .. M_{max_r + 2}, with M_0 = L.
    std::vector<long long> apparent;
    // N_0 .. N_{max_r}.
    std::vector<long long> actual;
    // Probability of an O, (L - M_1) / L.
    double h = 0.0;
    // k_r = N_r / (L h): probability that an O is followed by exactly r X
    // and then an O.  k_tail carries the mass of runs longer than max_r so
    // that k_0 + ... + k_max_r + k_tail = 1.
    std::vector<double> k;
    double k_tail = 0.0;
    // Probability of an X directly after an O, 1 - k_0.
    double a0 = 0.0;
    // Decibans lost per unit of overlap.
    double nu = 0.0;
    // mu[r] = 10 log10(26^{r+1} k_r / 25) + (r + 1) nu; mu[0] == 0.
    std::vector<double> mu;
    // Run scores for a run that starts the figure, when nothing (none) or
    // some non-overlapping letters precede it.  Estimated from the same
    // series as mu unless separate beginner statistics are supplied.
    std::vector<double> initial_mu_none;
    std::vector<double> initial_mu_some;
    // Sum of p^2 of the letter distribution the corpus came from.
    double beta = 0.0;
};

// Requires stats tabulated to max_r + 2.
RepeatParams estimate_params(const RgramCounts& stats, const LetterDistribution& dist, int max_r);

// Sum over maximal X runs of mu_r, minus nu per unit overlap.  A run that
// starts the figure uses the initial series.  The end-of-figure correction
// is not applied: a final run scores as an interior one.
Decibans general_fit_score(const RepetitionFigure& figure, const RepeatParams& params);

}  // namespace banbury::repeats
