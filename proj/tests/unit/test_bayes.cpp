#include <doctest.h>

#include <cmath>
#include <algorithm>
#include <random>
#include <vector>

#include "banbury/bayes.hpp"

using namespace banbury;

TEST_SUITE("bayes") {

TEST_CASE("odds from probability") {
    CHECK(odds_from_probability(0.5).ratio() == doctest::Approx(1.0));
    CHECK(odds_from_probability(5.0 / 7.0).ratio() == doctest::Approx(2.5));
    CHECK(odds_from_probability(0.0).ratio() == 0.0);
    CHECK(odds_from_probability(Rational(5, 7)) == Rational(5, 2));

    CHECK_THROWS_AS(odds_from_probability(1.0), DomainError);
    CHECK_THROWS_AS(odds_from_probability(-0.1), DomainError);
    CHECK_THROWS_AS(odds_from_probability(Rational(1)), DomainError);
    CHECK_THROWS_AS(Odds(-1.0), DomainError);
}

TEST_CASE("odds phrasing") {
    CHECK(Odds::on(5, 2).ratio() == doctest::Approx(2.5));
    CHECK(Odds::against(2, 1).ratio() == doctest::Approx(0.5));
}

TEST_CASE("apply factor") {
    Odds post = apply_factor(Odds(0.25), std::pow(10.0, 18.1 / 10.0));
    CHECK(post.ratio() == doctest::Approx(std::pow(10.0, 1.81) / 4.0).epsilon(1e-12));
    CHECK(post.ratio() == doctest::Approx(16.1).epsilon(0.01));
    CHECK(apply_evidence(Odds(0.25), Decibans{18.1}).ratio() == doctest::Approx(post.ratio()).epsilon(1e-12));

    // 43 half-decibans on a 1/25 prior: about 5:1 on.
    Odds key = apply_evidence(Odds(1.0 / 25.0), HalfDecibans{43});
    CHECK(key.ratio() == doctest::Approx(5.65).epsilon(0.01));

    CHECK(apply_factor(Odds(3.7), 1.0).ratio() == 3.7);
    CHECK_THROWS_AS(apply_factor(Odds(1.0), -2.0), DomainError);
}

TEST_CASE("decibans from factor") {
    CHECK(decibans_from_factor(8.0 / 3.0).value == doctest::Approx(4.2597).epsilon(1e-4));
    CHECK(decibans_from_factor((2.0 / 5.0) / (1.0 / 6.0)).value == doctest::Approx(3.8021).epsilon(1e-4));
    CHECK(decibans_from_factor(1.0).value == 0.0);
    CHECK_THROWS_AS(decibans_from_factor(0.0), DomainError);
    CHECK_THROWS_AS(decibans_from_factor(-1.0), DomainError);
}

TEST_CASE("half-deciban rounding") {
    CHECK(round_half_away(2.5) == 3);
    CHECK(round_half_away(-2.5) == -3);
    CHECK(round_half_away(-5.26) == -5);
    CHECK(half_decibans_from_factor(1.0).value == 0);
    CHECK(half_decibans_from_factor(10.0).value == 20);
    CHECK(HalfDecibans{20}.factor() == doctest::Approx(10.0));
    CHECK(HalfDecibans{7}.decibans().value == doctest::Approx(3.5));
}

TEST_CASE("combine independent factors") {
    std::vector<double> heart{(2.0 / 3.0) / (1.0 / 4.0), (2.0 / 5.0) / (1.0 / 6.0), (1.0 / 2.0) / (1.0 / 20.0)};
    Odds post = combine_independent(heart, Odds(0.25));
    CHECK(post.ratio() == doctest::Approx(16.0).epsilon(0.01));
    CHECK(total_decibans(heart).value == doctest::Approx(18.06).epsilon(1e-3));

    std::vector<double> vg{676.0 * 676.0 * 676.0};
    Odds rule = combine_independent(vg, Odds(1.0 / 4'999'999.0));
    CHECK(rule.ratio() == doctest::Approx(61.8).epsilon(0.01));

    std::vector<double> cancel{2.0, 0.5};
    CHECK(combine_independent(cancel, Odds(3.0)).ratio() == doctest::Approx(3.0));
    CHECK(combine_independent({}, Odds(3.0)).ratio() == 3.0);

    std::vector<double> bad{1.0, 0.0};
    CHECK_THROWS_AS(combine_independent(bad, Odds(1.0)), DomainError);
}

TEST_CASE("exact rational combination") {
    std::vector<Rational> heart{Rational(8, 3), Rational(12, 5), Rational(10)};
    CHECK(combine_independent(heart, Rational(1, 4)) == Rational(16));

    const Rational cube = Rational(676) * 676 * 676;
    std::vector<Rational> vg{cube};
    CHECK(combine_independent(vg, Rational(1, 4'999'999)) == cube / 4'999'999);
}

TEST_CASE("property: factor order and grouping do not matter") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> num(1, 50), den(1, 50), len(1, 8);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Rational> exact;
        std::vector<double> approx;
        int n = len(rng);
        for (int i = 0; i < n; ++i) {
            Rational f(num(rng), den(rng));
            exact.push_back(f);
            approx.push_back(static_cast<double>(f));
        }
        Rational prior(num(rng), den(rng));
        const Rational whole = combine_independent(exact, prior);

        // Split into two groups, apply one after the other.
        std::size_t cut = static_cast<std::size_t>(n) / 2;
        Rational staged = combine_independent(std::span<const Rational>(exact).subspan(cut),
                                              combine_independent(std::span<const Rational>(exact).first(cut), prior));
        CHECK(staged == whole);

        std::shuffle(approx.begin(), approx.end(), rng);
        double shuffled = combine_independent(approx, Odds(static_cast<double>(prior))).ratio();
        CHECK(std::abs(shuffled - static_cast<double>(whole)) <= 1e-12 * std::max(1.0, static_cast<double>(whole)));
    }
}

TEST_CASE("property: decibans of a product are the sum of decibans") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> logf(-6.0, 6.0);
    for (int trial = 0; trial < 1000; ++trial) {
        double f1 = std::pow(10.0, logf(rng));
        double f2 = std::pow(10.0, logf(rng));
        double lhs = decibans_from_factor(f1 * f2).value;
        double rhs = decibans_from_factor(f1).value + decibans_from_factor(f2).value;
        CHECK(std::abs(lhs - rhs) <= 1e-9);
        CHECK(std::abs(half_deciban_value(f1) - half_decibans_from_factor(f1).value) <= 0.5);
    }
}

TEST_CASE("property: odds and probability round trip") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 0.999);
    for (int trial = 0; trial < 1000; ++trial) {
        double p = u(rng);
        CHECK(std::abs(probability_from_odds(odds_from_probability(p)) - p) <= 1e-12);
    }
}

}
