#include "helixcipher/substitution.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include "helixcipher/errors.hpp"

namespace helixcipher {

SubstitutionTable SubstitutionTable::from_pairs(std::vector<std::pair<std::string, char>> pairs) {
    SubstitutionTable table;
    for (const auto& [class_key, letter] : pairs) {
        if (!table.by_class_.emplace(class_key, letter).second) {
            throw ValidationError("class '" + class_key + "' mapped twice");
        }
        if (!table.by_letter_.emplace(letter, class_key).second) {
            throw ValidationError("letter '" + std::string(1, letter) + "' mapped twice");
        }
    }
    table.pairs_ = std::move(pairs);
    return table;
}

bool SubstitutionTable::has_class(const std::string& class_key) const {
    return by_class_.contains(class_key);
}

char SubstitutionTable::letter_for(const std::string& class_key) const {
    const auto it = by_class_.find(class_key);
    if (it == by_class_.end()) {
        throw PreconditionError("class '" + class_key + "' is not in the substitution table");
    }
    return it->second;
}

const std::string& SubstitutionTable::class_for(char letter) const {
    const auto it = by_letter_.find(letter);
    if (it == by_letter_.end()) {
        throw PreconditionError("letter '" + std::string(1, letter) + "' is not in the substitution table");
    }
    return it->second;
}

SubstitutionTable build_mapping(const FrequencyTable& class_table, const FrequencyTable& letter_table) {
    if (class_table.empty() || letter_table.empty()) {
        throw PreconditionError("both frequency tables must be non-empty to build a mapping");
    }
    if (class_table.size() != letter_table.size()) {
        throw PreconditionError(
            "cardinality mismatch: " + std::to_string(class_table.size()) + " composition classes vs " +
            std::to_string(letter_table.size()) +
            " letters; adjust the omission set (--omit) until the letter count matches");
    }
    const auto classes = rank_ascending(class_table, TieBreakPolicy::kClassLexicographic);
    const auto letters = rank_ascending(letter_table, TieBreakPolicy::kLetterConsonantBeforeVowel);
    std::vector<std::pair<std::string, char>> pairs;
    pairs.reserve(classes.size());
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (letters[i].size() != 1) {
            throw ValidationError("letter table key '" + letters[i] + "' is not a single letter");
        }
        pairs.emplace_back(classes[i], letters[i][0]);
    }
    return SubstitutionTable::from_pairs(std::move(pairs));
}

std::string apply_mapping(const SubstitutionTable& mapping, const std::vector<std::string>& class_stream) {
    std::string text;
    text.reserve(class_stream.size());
    for (std::size_t i = 0; i < class_stream.size(); ++i) {
        if (!mapping.has_class(class_stream[i])) {
            throw PreconditionError("unmapped class '" + class_stream[i] + "' at stream position " +
                                    std::to_string(i));
        }
        text.push_back(mapping.letter_for(class_stream[i]));
    }
    return text;
}

std::vector<std::string> invert_mapping(const SubstitutionTable& mapping, std::string_view letters) {
    std::vector<std::string> stream;
    stream.reserve(letters.size());
    for (std::size_t i = 0; i < letters.size(); ++i) {
        stream.push_back(mapping.class_for(letters[i]));
    }
    return stream;
}

void write_mapping_tsv(std::ostream& out, const SubstitutionTable& mapping) {
    for (const auto& [class_key, letter] : mapping.pairs()) {
        out << class_key << '\t' << letter << '\n';
    }
}

SubstitutionTable read_mapping_tsv(std::istream& in) {
    std::vector<std::pair<std::string, char>> pairs;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const std::size_t tab = line.find('\t');
        if (tab == std::string::npos || line.size() != tab + 2) {
            throw ValidationError("mapping line " + std::to_string(line_no) + " is not class<TAB>letter");
        }
        pairs.emplace_back(line.substr(0, tab), line[tab + 1]);
    }
    if (pairs.empty()) {
        throw ValidationError("mapping file contains no pairs");
    }
    return SubstitutionTable::from_pairs(std::move(pairs));
}

SubstitutionTable read_mapping_tsv_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open mapping file: " + path);
    }
    return read_mapping_tsv(in);
}

}  // namespace helixcipher
