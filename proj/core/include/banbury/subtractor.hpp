#pragma once
// Slide distribution of a letter subtractor built by superimposing k
// components whose slides are uniform on 0..q.  The number of ways of
// reaching a total slide s is the coefficient of x^s in (1 + x + ... + x^q)^k;
// the slide acting on a letter is that total folded mod 26.

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "banbury/bayes.hpp"

namespace banbury::subtractor {

using BigInt = boost::multiprecision::cpp_int;

struct SlideDistribution {
    int components = 0;
    int max_slide = 0;
    // coeffs[s] = number of component combinations with total slide s.
    std::vector<BigInt> coeffs;
    // remainders[r] = sum of coeffs[s] over s = r (mod 26).
    std::array<BigInt, kAlphabetSize> remainders{};
    // (q + 1)^k.
    BigInt total;

    double probability(int slide) const;
};

// Exact expansion by repeated convolution.
SlideDistribution slide_coefficients(int components, int max_slide);

class SlideScoreTable {
public:
    static constexpr int kFloor = -99;

    // score(s) = round(20*log10(26 * remainders[s] / total)).
    static SlideScoreTable from_distribution(const SlideDistribution& dist);
    // A hand-tabulated table given slide by slide.
    static SlideScoreTable from_scores(const std::array<int, kAlphabetSize>& scores);

    HalfDecibans score(int slide) const { return HalfDecibans{scores_[static_cast<std::size_t>(mod26(slide))]}; }
    const std::array<int, kAlphabetSize>& scores() const { return scores_; }

private:
    SlideScoreTable() = default;
    std::array<int, kAlphabetSize> scores_{};
};

struct CribAlignment {
    Letters cipher;
    Letters crib;
    // slides[i] = (cipher[i] - crib[i]) mod 26.
    std::vector<int> slides;
};

// Aligns `crib` against `cipher` starting at `offset`.
CribAlignment slides_from_crib(std::string_view cipher, std::string_view crib, std::size_t offset = 0);

struct CribScore {
    HalfDecibans total;
    Odds posterior;
};

CribScore score_crib(std::span<const int> slides, const SlideScoreTable& table, Odds prior);
CribScore score_crib(const CribAlignment& alignment, const SlideScoreTable& table, Odds prior);

}  // namespace banbury::subtractor
