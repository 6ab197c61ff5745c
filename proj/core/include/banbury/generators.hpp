#pragma once
// Synthetic plaintexts and cipher keys for self-contained experiments.  All
// randomness comes from a caller-supplied engine so runs are reproducible.

#include <cstdint>
#include <random>
#include <vector>

#include "banbury/corpus.hpp"
#include "banbury/markov.hpp"
#include "banbury/transposition.hpp"
#include "banbury/vigenere.hpp"

namespace banbury::gen {

using Rng = std::mt19937_64;

Letters uniform_letters(std::size_t n, Rng& rng);
// Independent letters drawn from `dist`.
Letters sample_letters(const LetterDistribution& dist, std::size_t n, Rng& rng);
// First letter from `start`, then each letter from the previous one's row.
Letters markov_letters(const markov::TransitionMatrix& q, const markov::Vector& start, std::size_t n, Rng& rng);
// Run-together English words drawn from a built-in frequency-ranked
// vocabulary; every letter A-Z occurs in it.
Letters english_like_text(std::size_t n, Rng& rng);

vigenere::Key random_vigenere_key(std::size_t period, Rng& rng);
transposition::Key random_transposition_key(std::size_t width, Rng& rng);

// Superimposed periodic slide series; the slide at position t is the sum of
// the components' slides at t, mod 26.  cipher = plain + slide.
class Subtractor {
public:
    explicit Subtractor(std::vector<std::vector<int>> components);

    int slide(std::size_t t) const;
    Letters encipher(std::string_view plain, std::size_t start = 0) const;
    Letters decipher(std::string_view cipher, std::size_t start = 0) const;
    const std::vector<std::vector<int>>& components() const { return components_; }

private:
    std::vector<std::vector<int>> components_;
};

// Components with the given periods, each slide uniform on 0..max_slide.
Subtractor random_subtractor(const std::vector<std::size_t>& periods, int max_slide, Rng& rng);

// A key stream of independent random shifts, one per position.
std::vector<int> random_shift_stream(std::size_t n, Rng& rng);
Letters apply_shift_stream(std::string_view plain, const std::vector<int>& shifts, std::size_t start = 0);

}  // namespace banbury::gen
