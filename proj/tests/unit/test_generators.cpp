#include <doctest.h>

#include "banbury/corpus.hpp"
#include "banbury/generators.hpp"
#include "banbury/reference_data.hpp"

using namespace banbury;

TEST_SUITE("generators") {

TEST_CASE("seeded output is reproducible") {
    gen::Rng a(42), b(42);
    CHECK(gen::english_like_text(500, a) == gen::english_like_text(500, b));
    CHECK(gen::uniform_letters(100, a) == gen::uniform_letters(100, b));
    CHECK(gen::random_vigenere_key(7, a).letters() == gen::random_vigenere_key(7, b).letters());
    CHECK(gen::random_transposition_key(9, a).order() == gen::random_transposition_key(9, b).order());
}

TEST_CASE("english-like text") {
    gen::Rng rng(1);
    auto t = gen::english_like_text(50'000, rng);
    CHECK(t.size() == 50'000);
    auto d = LetterDistribution::from_letters(t);
    for (int a = 0; a < kAlphabetSize; ++a) CHECK(d[a] > 0.0);
    CHECK(d.coincidence() > 0.055);
    CHECK(d.of('E') > d.of('Q'));
}

TEST_CASE("sampled letters follow the distribution") {
    gen::Rng rng(2);
    auto ref = LetterDistribution::from_counts(reference::english_1000_counts());
    auto d = LetterDistribution::from_letters(gen::sample_letters(ref, 200'000, rng));
    for (int a = 0; a < kAlphabetSize; ++a) CHECK(std::abs(d[a] - ref[a]) < 0.004);
}

TEST_CASE("subtractor") {
    gen::Subtractor s({{1, 2}, {10, 0, 5}});
    CHECK(s.slide(0) == 11);
    CHECK(s.slide(1) == 2);
    CHECK(s.slide(2) == 6);
    CHECK(s.encipher("AAA") == "LCG");
    CHECK(s.decipher("LCG") == "AAA");
    CHECK(s.encipher("AA", 1) == "CG");
    CHECK_THROWS_AS(gen::Subtractor(std::vector<std::vector<int>>{}), DomainError);
    CHECK_THROWS_AS(gen::Subtractor(std::vector<std::vector<int>>{std::vector<int>{}}), DomainError);
}

TEST_CASE("random shift streams") {
    gen::Rng rng(3);
    auto shifts = gen::random_shift_stream(100, rng);
    CHECK(shifts.size() == 100);
    for (int s : shifts) CHECK((s >= 0 && s < 26));
    CHECK(gen::apply_shift_stream("ABC", {1, 2, 25}) == "BDB");
    CHECK(gen::apply_shift_stream("BC", {1, 2, 25}, 1) == "DB");
}

}
