#include "helixcipher/substitution.hpp"

#include <sstream>

#include "doctest.h"
#include "helixcipher/errors.hpp"
#include "helixcipher/fixtures.hpp"
#include "oracles.hpp"

using namespace helixcipher;

TEST_CASE("build_mapping reproduces the fig2 reference from the fixture tables") {
    const auto mapping = build_mapping(fig1a_class_counts(), fig1b_letter_counts());
    CHECK(mapping.pairs() == fig2_reference_pairs());
    // The H/I tie at count 253 resolves consonant before vowel.
    CHECK(mapping.letter_for("0235") == 'H');
    CHECK(mapping.letter_for("1225") == 'I');
}

TEST_CASE("build_mapping pairs singleton tables") {
    FrequencyTable classes;
    classes.add("0055", 7);
    FrequencyTable letters;
    letters.add("Q", 3);
    const auto mapping = build_mapping(classes, letters);
    REQUIRE(mapping.size() == 1);
    CHECK(mapping.letter_for("0055") == 'Q');
}

TEST_CASE("build_mapping rejects cardinality mismatches, naming both counts") {
    FrequencyTable classes = fig1a_class_counts();
    classes.add("0019", 1);  // 22 classes vs 21 letters
    try {
        build_mapping(classes, fig1b_letter_counts());
        FAIL("expected PreconditionError");
    } catch (const PreconditionError& e) {
        const std::string message = e.what();
        CHECK(message.find("22") != std::string::npos);
        CHECK(message.find("21") != std::string::npos);
        CHECK(message.find("omit") != std::string::npos);
    }
    CHECK_THROWS_AS(build_mapping(FrequencyTable{}, fig1b_letter_counts()), PreconditionError);
}

TEST_CASE("mapping rank is invariant under uniform count scaling") {
    FrequencyTable classes = fig1a_class_counts();
    FrequencyTable letters = fig1b_letter_counts();
    FrequencyTable classes_scaled;
    FrequencyTable letters_scaled;
    for (const auto& [key, count] : classes.entries()) classes_scaled.add(key, count * 17);
    for (const auto& [key, count] : letters.entries()) letters_scaled.add(key, count * 17);
    CHECK(build_mapping(classes_scaled, letters_scaled).pairs() ==
          build_mapping(classes, letters).pairs());
}

TEST_CASE("apply_mapping decodes position by position") {
    const auto mapping = SubstitutionTable::from_pairs(fig2_reference_pairs());
    CHECK(apply_mapping(mapping, {"1234", "2233", "1135"}) == "EAT");
    CHECK(apply_mapping(mapping, {}) == "");
    CHECK_THROWS_WITH_AS(apply_mapping(mapping, {"1234", "0019"}),
                         "unmapped class '0019' at stream position 1", PreconditionError);
}

TEST_CASE("apply then invert recovers the class stream") {
    const auto mapping = build_mapping(fig1a_class_counts(), fig1b_letter_counts());
    const auto class_table = fig1a_class_counts();
    std::vector<std::string> keys;
    for (const auto& [key, count] : class_table.entries()) keys.push_back(key);

    std::mt19937_64 rng(41);
    for (int i = 0; i < 30; ++i) {
        std::vector<std::string> stream;
        const std::size_t length = rng() % 60;
        for (std::size_t k = 0; k < length; ++k) stream.push_back(keys[rng() % keys.size()]);
        const std::string text = apply_mapping(mapping, stream);
        CHECK(text.size() == stream.size());
        CHECK(invert_mapping(mapping, text) == stream);
    }
}

TEST_CASE("mapping TSV round-trips and matches the fig2 reference bytes") {
    const auto mapping = build_mapping(fig1a_class_counts(), fig1b_letter_counts());
    std::ostringstream out;
    write_mapping_tsv(out, mapping);

    std::string expected;
    for (const auto& [key, letter] : fig2_reference_pairs()) {
        expected += key;
        expected += '\t';
        expected += letter;
        expected += '\n';
    }
    CHECK(out.str() == expected);

    std::istringstream in(out.str());
    CHECK(read_mapping_tsv(in).pairs() == mapping.pairs());
}

TEST_CASE("mapping TSV reader rejects duplicates and junk") {
    std::istringstream dupe_class("0055\tJ\n0055\tK\n");
    CHECK_THROWS_AS(read_mapping_tsv(dupe_class), ValidationError);
    std::istringstream dupe_letter("0055\tJ\n0028\tJ\n");
    CHECK_THROWS_AS(read_mapping_tsv(dupe_letter), ValidationError);
    std::istringstream junk("0055 J\n");
    CHECK_THROWS_AS(read_mapping_tsv(junk), ValidationError);
    std::istringstream empty("# nothing\n");
    CHECK_THROWS_AS(read_mapping_tsv(empty), ValidationError);
}
