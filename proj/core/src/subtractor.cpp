#include "banbury/subtractor.hpp"

#include <cmath>
#include <string>

namespace banbury::subtractor {

double SlideDistribution::probability(int slide) const {
    return static_cast<double>(Rational(remainders[static_cast<std::size_t>(mod26(slide))], total));
}

SlideDistribution slide_coefficients(int components, int max_slide) {
    if (components < 1) throw DomainError("need at least one component");
    if (max_slide < 0) throw DomainError("max_slide must be non-negative");
    SlideDistribution d;
    d.components = components;
    d.max_slide = max_slide;
    d.coeffs = {BigInt(1)};
    const auto width = static_cast<std::size_t>(max_slide) + 1;
    for (int c = 0; c < components; ++c) {
        std::vector<BigInt> next(d.coeffs.size() + width - 1);
        for (std::size_t i = 0; i < d.coeffs.size(); ++i) {
            for (std::size_t j = 0; j < width; ++j) next[i + j] += d.coeffs[i];
        }
        d.coeffs = std::move(next);
    }
    for (std::size_t s = 0; s < d.coeffs.size(); ++s) {
        d.remainders[s % kAlphabetSize] += d.coeffs[s];
        d.total += d.coeffs[s];
    }
    return d;
}

SlideScoreTable SlideScoreTable::from_distribution(const SlideDistribution& dist) {
    if (dist.total <= 0) throw DomainError("slide distribution has zero total");
    SlideScoreTable t;
    for (std::size_t s = 0; s < kAlphabetSize; ++s) {
        double ratio = static_cast<double>(Rational(dist.remainders[s] * kAlphabetSize, dist.total));
        t.scores_[s] = ratio > 0.0 ? half_decibans_from_factor(ratio).value : kFloor;
    }
    return t;
}

SlideScoreTable SlideScoreTable::from_scores(const std::array<int, kAlphabetSize>& scores) {
    SlideScoreTable t;
    t.scores_ = scores;
    return t;
}

CribAlignment slides_from_crib(std::string_view cipher, std::string_view crib, std::size_t offset) {
    require_letters(cipher, "cipher");
    require_letters(crib, "crib");
    if (offset > cipher.size() || crib.size() > cipher.size() - offset) {
        throw DomainError("crib of length " + std::to_string(crib.size()) + " at offset " +
                          std::to_string(offset) + " runs past cipher of length " +
                          std::to_string(cipher.size()));
    }
    CribAlignment a;
    a.cipher = Letters(cipher.substr(offset, crib.size()));
    a.crib = Letters(crib);
    a.slides.reserve(crib.size());
    for (std::size_t i = 0; i < crib.size(); ++i) {
        a.slides.push_back(mod26(letter_index(a.cipher[i]) - letter_index(crib[i])));
    }
    return a;
}

CribScore score_crib(std::span<const int> slides, const SlideScoreTable& table, Odds prior) {
    HalfDecibans total;
    for (int s : slides) total += table.score(s);
    return {total, apply_evidence(prior, total)};
}

CribScore score_crib(const CribAlignment& alignment, const SlideScoreTable& table, Odds prior) {
    return score_crib(std::span<const int>(alignment.slides), table, prior);
}

}  // namespace banbury::subtractor
