#include "helixcipher/composition.hpp"

#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "helixcipher/errors.hpp"
#include "oracles.hpp"

using namespace helixcipher;

TEST_CASE("compose tallies each base") {
    CHECK(compose("ATGGCATTAC") == TurnComposition{3, 3, 2, 2});
    CHECK(compose("AAAAAAAAAA") == TurnComposition{10, 0, 0, 0});
    CHECK(compose("ACACACACAC") == TurnComposition{5, 0, 0, 5});
    CHECK(compose("") == TurnComposition{0, 0, 0, 0});
    CHECK_THROWS_AS(compose("ACGN"), PreconditionError);
}

TEST_CASE("classify sorts counts into the canonical key") {
    CHECK(classify(TurnComposition{5, 0, 0, 5}).key() == "0055");
    CHECK(classify(TurnComposition{1, 2, 3, 4}).key() == "1234");
    CHECK(classify(TurnComposition{3, 3, 2, 2}).key() == "2233");
}

TEST_CASE("classify is invariant under within-window shuffles") {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 100; ++i) {
        std::string window = oracle::random_bases(rng, 10);
        const auto key = classify(compose(window)).key();
        std::shuffle(window.begin(), window.end(), rng);
        CHECK(classify(compose(window)).key() == key);
    }
}

TEST_CASE("keys with a two-digit count use the dash rendering") {
    CHECK(classify(compose("AAAAAAAAAAGG")).key() == "0-0-2-10");
    CHECK(CompositionClass({10, 0, 0, 0}).key() == "0-0-0-10");
}

TEST_CASE("from_key parses both renderings and rejects junk") {
    CHECK(CompositionClass::from_key("0055").counts() == std::array<uint32_t, 4>{0, 0, 5, 5});
    CHECK(CompositionClass::from_key("0-0-0-10").counts() == std::array<uint32_t, 4>{0, 0, 0, 10});
    CHECK_THROWS_AS(CompositionClass::from_key("5500"), ValidationError);  // not non-decreasing
    CHECK_THROWS_AS(CompositionClass::from_key("005"), ValidationError);
    CHECK_THROWS_AS(CompositionClass::from_key("0-0-10"), ValidationError);
    CHECK_THROWS_AS(CompositionClass::from_key("00x5"), ValidationError);
}

TEST_CASE("enumerate_classes matches the documented class-space sizes") {
    const auto base = enumerate_classes(10, 8);
    CHECK(base.size() == 21);

    const auto with_nine = enumerate_classes(10, 9);
    CHECK(with_nine.size() == 22);
    CHECK(std::any_of(with_nine.begin(), with_nine.end(),
                      [](const CompositionClass& c) { return c.key() == "0019"; }));

    const auto with_ten = enumerate_classes(10, 10);
    CHECK(with_ten.size() == 23);
    CHECK(std::any_of(with_ten.begin(), with_ten.end(),
                      [](const CompositionClass& c) { return c.key() == "0-0-0-10"; }));

    const auto unit = enumerate_classes(1, 1);
    REQUIRE(unit.size() == 1);
    CHECK(unit[0].key() == "0001");
}

TEST_CASE("enumerate_classes is sorted, duplicate-free and matches brute force") {
    for (uint32_t w = 1; w <= 12; ++w) {
        for (uint32_t m = 1; m <= w; ++m) {
            if (4 * m < w) {
                CHECK_THROWS_AS(enumerate_classes(w, m), PreconditionError);
                continue;
            }
            const auto classes = enumerate_classes(w, m);
            const auto expected = oracle::brute_force_classes(w, m);
            REQUIRE(classes.size() == expected.size());
            std::size_t i = 0;
            for (const auto& [key, permutations] : expected) {
                CHECK(classes[i].counts() == key);
                CHECK(permutation_count(classes[i]) == permutations);
                ++i;
            }
            CHECK(std::is_sorted(classes.begin(), classes.end()));
        }
    }
}

TEST_CASE("enumerate_classes rejects bad parameters") {
    CHECK_THROWS_AS(enumerate_classes(10, 0), PreconditionError);
    CHECK_THROWS_AS(enumerate_classes(0, 1), PreconditionError);
    CHECK_THROWS_AS(enumerate_classes(10, 11), PreconditionError);
    CHECK_THROWS_AS(enumerate_classes(10, 2), PreconditionError);  // 4*2 < 10
}

TEST_CASE("permutation_count is the multinomial over count multiplicities") {
    CHECK(permutation_count(CompositionClass::from_key("0055")) == 6);
    CHECK(permutation_count(CompositionClass::from_key("1117")) == 4);
    CHECK(permutation_count(CompositionClass::from_key("1234")) == 24);
    CHECK(permutation_count(CompositionClass::from_key("0127")) == 24);
    CHECK(permutation_count(CompositionClass::from_key("1225")) == 12);
    CHECK(permutation_count(CompositionClass({2, 2, 2, 2})) == 1);
}

TEST_CASE("permutation counts over the (10,8) space sum to 270") {
    const auto classes = enumerate_classes(10, 8);
    const uint64_t total = std::accumulate(classes.begin(), classes.end(), uint64_t{0},
                                           [](uint64_t acc, const CompositionClass& c) {
                                               return acc + permutation_count(c);
                                           });
    CHECK(total == 270);
}
