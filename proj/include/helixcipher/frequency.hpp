#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "helixcipher/genome_io.hpp"

namespace helixcipher {

/// Keyed counts with probability accessors. Keys are composition-class
/// keys or single letters; probabilities always use the table's own
/// total (the sum of its counts).
class FrequencyTable {
public:
    void add(const std::string& key, uint64_t n = 1);
    /// Count-additive merge, for combining parallel partial tallies.
    void merge(const FrequencyTable& other);

    uint64_t count(const std::string& key) const;
    uint64_t total() const { return total_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    double probability(const std::string& key) const;

    const std::map<std::string, uint64_t>& entries() const { return entries_; }

private:
    std::map<std::string, uint64_t> entries_;
    uint64_t total_ = 0;
};

/// Deterministic orderings for equal-probability keys.
enum class TieBreakPolicy {
    kClassLexicographic,          ///< compare class keys by component tuple
    kLetterConsonantBeforeVowel,  ///< consonants precede vowels, then lexicographic
};

/// True for A, E, I, O, U; Y counts as a consonant.
bool is_vowel(char letter);

/// One entry per distinct observed class; total equals the window
/// count. All windows must share one size.
FrequencyTable tally_classes(const std::vector<TurnWindow>& windows);

/// Case-folded letter counts, skipping the omitted letters and every
/// non-alphabetic symbol. Raises ValidationError when nothing is
/// countable.
FrequencyTable tally_letters(std::string_view corpus, const std::set<char>& omit);
FrequencyTable tally_letters(std::istream& corpus, const std::set<char>& omit);

/// Keys ordered by ascending probability; ties broken per policy. The
/// result is a deterministic function of (table, policy).
std::vector<std::string> rank_ascending(const FrequencyTable& table, TieBreakPolicy policy);

/// count/total rendered at 4 decimals, rounding half away from zero.
std::string probability_4dp(uint64_t count, uint64_t total);

/// Parses an omission set such as "C,Q,V,X,Z" (commas optional).
std::set<char> parse_omit_list(std::string_view text);

/// Reads a two-column key/count TSV ('#' lines ignored).
FrequencyTable load_table_tsv(std::istream& in);
FrequencyTable load_table_tsv_file(const std::string& path);

}  // namespace helixcipher
