#pragma once

#include <iosfwd>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "helixcipher/frequency.hpp"

namespace helixcipher {

/// An ordered bijection from composition-class keys to letters, aligned
/// by ascending-probability rank.
class SubstitutionTable {
public:
    /// Validates the bijection: no class or letter may repeat.
    static SubstitutionTable from_pairs(std::vector<std::pair<std::string, char>> pairs);

    const std::vector<std::pair<std::string, char>>& pairs() const { return pairs_; }
    std::size_t size() const { return pairs_.size(); }

    bool has_class(const std::string& class_key) const;
    /// Raises PreconditionError for an unmapped class.
    char letter_for(const std::string& class_key) const;
    /// Raises PreconditionError for an unmapped letter.
    const std::string& class_for(char letter) const;

private:
    std::vector<std::pair<std::string, char>> pairs_;
    std::unordered_map<std::string, char> by_class_;
    std::unordered_map<char, std::string> by_letter_;
};

/// Pairs the i-th class in ascending rank with the i-th letter in
/// ascending rank. Both tables must be non-empty and of equal key
/// count; a mismatch raises PreconditionError naming both counts, since
/// choosing which letters to admit is a decision for the omission set,
/// not a heuristic.
SubstitutionTable build_mapping(const FrequencyTable& class_table, const FrequencyTable& letter_table);

/// Decodes a class-key stream; position i of the output holds the
/// letter mapped from class i. An unmapped class raises
/// PreconditionError naming the class and its stream position.
std::string apply_mapping(const SubstitutionTable& mapping, const std::vector<std::string>& class_stream);

/// Inverse of apply_mapping for a decoded letter text.
std::vector<std::string> invert_mapping(const SubstitutionTable& mapping, std::string_view letters);

/// Bare two-column rows (class<TAB>letter), in rank order.
void write_mapping_tsv(std::ostream& out, const SubstitutionTable& mapping);
SubstitutionTable read_mapping_tsv(std::istream& in);
SubstitutionTable read_mapping_tsv_file(const std::string& path);

}  // namespace helixcipher
