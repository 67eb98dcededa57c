#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "helixcipher/frequency.hpp"

namespace helixcipher {

/// One row of the bundled class reference table: the observed count,
/// plus the permutation count and 4-decimal probability exactly as
/// printed in the source analysis, kept verbatim for diffing. The
/// reported permutation column disagrees with the multinomial on the
/// five all-distinct classes (16 vs 24); the reported frequency column
/// sums to 3182, one short of the titular 3183 turns, which is why its
/// printed probabilities reproduce only against the column's own sum.
struct ClassReferenceRow {
    const char* key;
    uint64_t frequency;
    uint32_t reported_permutations;
    const char* reported_probability;
};

/// Rows of the "fig1a" reference, in ascending-probability order.
const std::vector<ClassReferenceRow>& fig1a_reference();

/// Rows of the "fig1b" reference letter tally (letter, count, printed
/// probability), in ascending-probability order.
struct LetterReferenceRow {
    char letter;
    uint64_t frequency;
    const char* reported_probability;
};
const std::vector<LetterReferenceRow>& fig1b_reference();

/// The "fig2" reference substitution pairs, in rank order.
const std::vector<std::pair<std::string, char>>& fig2_reference_pairs();

FrequencyTable fig1a_class_counts();
FrequencyTable fig1b_letter_counts();

/// Looks up a bundled class-count or letter-count fixture by name
/// ("fig1a", "fig1b"). Raises ValidationError on unknown names.
FrequencyTable fixture_table(const std::string& name);

/// {C, Q, V, X, Z}
std::set<char> default_omitted_letters();

}  // namespace helixcipher
