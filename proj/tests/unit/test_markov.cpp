#include <doctest.h>

#include <random>

#include "banbury/corpus.hpp"
#include "banbury/generators.hpp"
#include "banbury/markov.hpp"

using namespace banbury;
using namespace banbury::markov;

namespace {

Matrix random_positive(gen::Rng& rng) {
    std::uniform_real_distribution<double> u(0.01, 1.0);
    Matrix m{};
    for (auto& row : m) {
        double s = 0.0;
        for (auto& x : row) s += (x = u(rng));
        for (auto& x : row) x /= s;
    }
    return m;
}

}  // namespace

TEST_SUITE("markov") {

TEST_CASE("matrix helpers") {
    auto i = identity();
    CHECK(max_abs_difference(multiply(i, i), i) == 0.0);
    gen::Rng rng(1);
    auto m = random_positive(rng);
    CHECK(max_abs_difference(power(m, 0), i) == 0.0);
    CHECK(max_abs_difference(power(m, 3), multiply(m, multiply(m, m))) <= 1e-15);
    CHECK(max_abs_difference(power(m, 10), multiply(power(m, 4), power(m, 6))) <= 1e-14);
    CHECK_THROWS_AS(power(m, -1), DomainError);
}

TEST_CASE("rows are validated") {
    Matrix bad{};
    CHECK_THROWS_AS(TransitionMatrix::from_rows(bad), DomainError);
    auto m = identity();
    m[0][0] = 1.5;
    m[0][1] = -0.5;
    CHECK_THROWS_AS(TransitionMatrix::from_rows(m), DomainError);
}

TEST_CASE("equal rows converge at once") {
    gen::Rng rng(2);
    auto p = random_positive(rng)[0];
    Matrix m;
    m.fill(p);
    auto rep = stationarity_check(TransitionMatrix::from_rows(m), 1e-12, 50);
    CHECK(rep.converged);
    CHECK(rep.steps == 1);
    for (int b = 0; b < kAlphabetSize; ++b) CHECK(rep.stationary[static_cast<std::size_t>(b)] == doctest::Approx(p[static_cast<std::size_t>(b)]));
}

TEST_CASE("permutation chain does not converge") {
    Matrix m{};
    for (int a = 0; a < kAlphabetSize; ++a) m[static_cast<std::size_t>(a)][static_cast<std::size_t>((a + 1) % kAlphabetSize)] = 1.0;
    auto q = TransitionMatrix::from_rows(m);
    auto rep = stationarity_check(q, 1e-9, 200);
    CHECK_FALSE(rep.converged);
    CHECK(rep.max_deviation > 0.5);
    for (double x : stationary_distribution(q)) CHECK(x == doctest::Approx(1.0 / 26.0));
}

TEST_CASE("property: random positive chains converge quickly") {
    gen::Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        auto q = TransitionMatrix::from_rows(random_positive(rng));
        auto rep = stationarity_check(q, 1e-9, 200);
        CHECK(rep.converged);
        CHECK(rep.steps <= 30);
        auto p = rep.stationary;
        auto pq = left_multiply(p, q.q());
        double s = 0.0;
        for (int b = 0; b < kAlphabetSize; ++b) {
            CHECK(std::abs(pq[static_cast<std::size_t>(b)] - p[static_cast<std::size_t>(b)]) <= 1e-12);
            s += p[static_cast<std::size_t>(b)];
        }
        CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(rep.yq_residual <= 1e-12);
        CHECK(rep.idempotence_residual <= 1e-12);
    }
}

TEST_CASE("corpus chain is stationary at the letter frequencies") {
    gen::Rng rng(4);
    auto text = gen::english_like_text(100'000, rng);
    auto stats = BigramStats::from_letters(text, true);
    auto q = TransitionMatrix::from_bigrams(stats);
    auto rep = stationarity_check(q, 1e-6, 100);
    CHECK(rep.converged);
    CHECK(rep.yq_residual <= 1e-8);
    CHECK(rep.idempotence_residual <= 1e-8);
    auto freq = LetterDistribution::from_letters(text);
    for (int b = 0; b < kAlphabetSize; ++b) CHECK(rep.stationary[static_cast<std::size_t>(b)] == doctest::Approx(freq[b]).epsilon(1e-9));
}

TEST_CASE("rows for unseen letters are filled with the frequencies") {
    auto stats = BigramStats::from_letters("ABCABCABD", true);
    auto q = TransitionMatrix::from_bigrams(stats);
    for (int b = 0; b < kAlphabetSize; ++b) CHECK(q(25, b) == doctest::Approx(stats.marginal(b)));
    auto p = stationary_distribution(q);
    for (int b = 0; b < kAlphabetSize; ++b) CHECK(p[static_cast<std::size_t>(b)] == doctest::Approx(stats.marginal(b)).epsilon(1e-9));
}

TEST_CASE("markov sampling follows the chain") {
    Matrix m{};
    for (int a = 0; a < kAlphabetSize; ++a) m[static_cast<std::size_t>(a)][static_cast<std::size_t>((a + 1) % kAlphabetSize)] = 1.0;
    Vector start{};
    start[0] = 1.0;
    gen::Rng rng(5);
    CHECK(gen::markov_letters(TransitionMatrix::from_rows(m), start, 30, rng) == "ABCDEFGHIJKLMNOPQRSTUVWXYZABCD");
}

}
