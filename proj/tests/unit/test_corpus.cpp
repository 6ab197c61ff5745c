#include <doctest.h>

#include <random>
#include <string>

#include "banbury/corpus.hpp"
#include "banbury/generators.hpp"
#include "banbury/reference_data.hpp"

using namespace banbury;

TEST_SUITE("corpus") {

TEST_CASE("normalize keeps ASCII letters only") {
    CHECK(normalize("Owing to war.") == "OWINGTOWAR");
    CHECK(normalize("\xC3\x84" "B") == "B");
    CHECK(normalize("").empty());
    CHECK(normalize("a1b2-C_d") == "ABCD");
}

TEST_CASE("letter distribution from the 1000-letter count") {
    auto d = LetterDistribution::from_counts(reference::english_1000_counts());
    CHECK(d.total() == 1000);
    CHECK(d.of('E') == doctest::Approx(0.116));
    CHECK(d.of('Q') == doctest::Approx(0.002));
    // Oracle: sum of squared counts / 10^6 = 62120 / 10^6.
    CHECK(d.coincidence() == doctest::Approx(0.06212).epsilon(1e-12));

    double s = 0.0;
    for (double p : d.probabilities()) s += p;
    CHECK(std::abs(s - 1.0) <= 1e-9);
}

TEST_CASE("uniform distribution") {
    auto u = LetterDistribution::uniform();
    for (int a = 0; a < kAlphabetSize; ++a) CHECK(u[a] == doctest::Approx(1.0 / 26.0));
    CHECK(u.coincidence() == doctest::Approx(1.0 / 26.0));
}

TEST_CASE("empty counts are rejected") {
    LetterCounts zero{};
    CHECK_THROWS_AS(LetterDistribution::from_counts(zero), EmptyCorpusError);
    CHECK_THROWS_AS(LetterDistribution::from_letters(normalize("123 !")), EmptyCorpusError);
}

TEST_CASE("coincidence is at least 1/26") {
    gen::Rng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        auto text = gen::uniform_letters(1 + trial * 7, rng);
        auto d = LetterDistribution::from_letters(text);
        CHECK(d.coincidence() >= 1.0 / 26.0 - 1e-15);
    }
}

TEST_CASE("bigram statistics") {
    auto abab = BigramStats::from_letters("ABAB", true);
    CHECK(abab.joint('A', 'B') == doctest::Approx(0.5));
    CHECK(abab.joint('B', 'A') == doctest::Approx(0.5));
    CHECK(abab.transition(letter_index('A'), letter_index('B')) == doctest::Approx(1.0));

    auto aaaa = BigramStats::from_letters("AAAA", true);
    CHECK(aaaa.transition(0, 0) == doctest::Approx(1.0));
    CHECK(aaaa.marginal('A') == doctest::Approx(1.0));

    auto open = BigramStats::from_letters("ABC", false);
    CHECK(open.total() == 2);
    CHECK(open.joint('C', 'A') == 0.0);

    CHECK_THROWS_AS(BigramStats::from_letters("A", true), DataError);
}

TEST_CASE("bigram marginals agree on a circular corpus") {
    gen::Rng rng(17);
    auto text = gen::english_like_text(10'000, rng);
    auto s = BigramStats::from_letters(text, true);
    double total = 0.0;
    for (int a = 0; a < kAlphabetSize; ++a) {
        CHECK(std::abs(s.marginal(a) - s.column_marginal(a)) <= 1e-6);
        double row = 0.0;
        for (int b = 0; b < kAlphabetSize; ++b) {
            total += s.joint(a, b);
            row += s.transition(a, b);
        }
        if (s.marginal(a) > 0.0) CHECK(row == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("r-gram counts wrap round the corpus") {
    auto abab = RgramCounts::from_letters("ABAB", 2);
    CHECK(abab.count("AB") == 2);
    CHECK(abab.count("BA") == 2);
    CHECK(abab.count("AA") == 0);

    auto aaa = RgramCounts::from_letters("AAA", 2);
    CHECK(aaa.count("AA") == 3);
    CHECK(aaa.apparent_repeats(0) == 3);
    CHECK(aaa.apparent_repeats(1) == 3);

    CHECK_THROWS_AS(RgramCounts::from_letters("AB", 3), DataError);
    CHECK_THROWS_AS(RgramCounts::from_letters("AB", 0), DomainError);
    CHECK_THROWS_AS(abab.grams(3), DomainError);
}

TEST_CASE("r-gram totals equal the corpus length") {
    gen::Rng rng(23);
    auto text = gen::english_like_text(777, rng);
    auto rc = RgramCounts::from_letters(text, 6);
    for (int r = 1; r <= 6; ++r) {
        long long sum = 0;
        for (const auto& [g, c] : rc.grams(r)) sum += c;
        CHECK(sum == 777);
    }
}

TEST_CASE("apparent repeats match a direct pair count") {
    gen::Rng rng(29);
    auto text = gen::uniform_letters(1000, rng);
    auto rc = RgramCounts::from_letters(text, 3);
    const std::size_t n = text.size();
    for (int r = 1; r <= 3; ++r) {
        long long brute = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                bool same = true;
                for (int t = 0; t < r && same; ++t) same = text[(i + t) % n] == text[(j + t) % n];
                brute += same;
            }
        }
        CHECK(rc.apparent_repeats(r) == brute);
    }
}

}
