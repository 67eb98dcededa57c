#include "helixcipher/frequency.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>
#include <unordered_map>

#include "helixcipher/composition.hpp"
#include "helixcipher/errors.hpp"

namespace helixcipher {

void FrequencyTable::add(const std::string& key, uint64_t n) {
    entries_[key] += n;
    total_ += n;
}

void FrequencyTable::merge(const FrequencyTable& other) {
    for (const auto& [key, count] : other.entries_) entries_[key] += count;
    total_ += other.total_;
}

uint64_t FrequencyTable::count(const std::string& key) const {
    const auto it = entries_.find(key);
    return it == entries_.end() ? 0 : it->second;
}

double FrequencyTable::probability(const std::string& key) const {
    if (total_ == 0) {
        throw PreconditionError("probability undefined on an empty table");
    }
    return static_cast<double>(count(key)) / static_cast<double>(total_);
}

bool is_vowel(char letter) {
    switch (letter) {
        case 'A': case 'E': case 'I': case 'O': case 'U': return true;
        default: return false;
    }
}

FrequencyTable tally_classes(const std::vector<TurnWindow>& windows) {
    FrequencyTable table;
    if (windows.empty()) return table;
    const uint64_t size = windows.front().size();
    if (size > 0xFFFF) {
        throw PreconditionError("window size too large to tally: " + std::to_string(size));
    }
    // Hot path: accumulate on packed sorted counts, render keys once.
    std::unordered_map<uint64_t, uint64_t> packed;
    for (const auto& window : windows) {
        if (window.size() != size) {
            throw PreconditionError("windows of mixed sizes in one tally (" + std::to_string(size) +
                                    " vs " + std::to_string(window.size()) + ")");
        }
        auto counts = compose(window).counts();
        std::sort(counts.begin(), counts.end());
        const uint64_t code = (static_cast<uint64_t>(counts[0]) << 48) |
                              (static_cast<uint64_t>(counts[1]) << 32) |
                              (static_cast<uint64_t>(counts[2]) << 16) | counts[3];
        ++packed[code];
    }
    for (const auto& [code, n] : packed) {
        const CompositionClass cls({static_cast<uint32_t>(code >> 48), static_cast<uint32_t>((code >> 32) & 0xFFFF),
                                    static_cast<uint32_t>((code >> 16) & 0xFFFF), static_cast<uint32_t>(code & 0xFFFF)});
        table.add(cls.key(), n);
    }
    return table;
}

FrequencyTable tally_letters(std::string_view corpus, const std::set<char>& omit) {
    std::array<uint64_t, 26> counts{};
    std::array<bool, 26> omitted{};
    for (char letter : omit) omitted[letter - 'A'] = true;

    for (char raw : corpus) {
        char c = raw;
        if (c >= 'a' && c <= 'z') c = static_cast<char>(c - ('a' - 'A'));
        if (c < 'A' || c > 'Z') continue;
        if (omitted[c - 'A']) continue;
        ++counts[c - 'A'];
    }

    FrequencyTable table;
    for (std::size_t i = 0; i < 26; ++i) {
        if (counts[i]) table.add(std::string(1, static_cast<char>('A' + i)), counts[i]);
    }
    if (table.empty()) {
        throw ValidationError("corpus contains no countable letters");
    }
    return table;
}

FrequencyTable tally_letters(std::istream& corpus, const std::set<char>& omit) {
    std::ostringstream buffer;
    buffer << corpus.rdbuf();
    const std::string text = buffer.str();
    return tally_letters(std::string_view(text), omit);
}

namespace {

struct RankEntry {
    uint64_t count;
    bool tuple_valid;
    std::array<uint32_t, 4> tuple;
    const std::string* key;
};

bool tie_less(const RankEntry& a, const RankEntry& b, TieBreakPolicy policy) {
    if (policy == TieBreakPolicy::kLetterConsonantBeforeVowel) {
        const bool va = !a.key->empty() && is_vowel(a.key->front());
        const bool vb = !b.key->empty() && is_vowel(b.key->front());
        if (va != vb) return !va;  // consonant first
        return *a.key < *b.key;
    }
    if (a.tuple_valid && b.tuple_valid) return a.tuple < b.tuple;
    return *a.key < *b.key;
}

}  // namespace

std::vector<std::string> rank_ascending(const FrequencyTable& table, TieBreakPolicy policy) {
    if (table.empty()) {
        throw PreconditionError("cannot rank an empty frequency table");
    }
    std::vector<RankEntry> entries;
    entries.reserve(table.size());
    for (const auto& [key, count] : table.entries()) {
        RankEntry entry{count, false, {}, &key};
        if (policy == TieBreakPolicy::kClassLexicographic) {
            try {
                entry.tuple = CompositionClass::from_key(key).counts();
                entry.tuple_valid = true;
            } catch (const ValidationError&) {
                entry.tuple_valid = false;
            }
        }
        entries.push_back(entry);
    }
    std::sort(entries.begin(), entries.end(), [policy](const RankEntry& a, const RankEntry& b) {
        if (a.count != b.count) return a.count < b.count;
        return tie_less(a, b, policy);
    });
    std::vector<std::string> keys;
    keys.reserve(entries.size());
    for (const auto& entry : entries) keys.push_back(*entry.key);
    return keys;
}

std::string probability_4dp(uint64_t count, uint64_t total) {
    if (total == 0) {
        throw PreconditionError("probability undefined for total 0");
    }
    const uint64_t scaled = (20000 * count + total) / (2 * total);
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%llu.%04llu",
                  static_cast<unsigned long long>(scaled / 10000),
                  static_cast<unsigned long long>(scaled % 10000));
    return buffer;
}

std::set<char> parse_omit_list(std::string_view text) {
    std::set<char> omit;
    for (char raw : text) {
        char c = raw;
        if (c >= 'a' && c <= 'z') c = static_cast<char>(c - ('a' - 'A'));
        if (c == ',' || c == ' ') continue;
        if (c < 'A' || c > 'Z') {
            throw ValidationError("omission set may only contain letters: '" + std::string(1, raw) + "'");
        }
        omit.insert(c);
    }
    return omit;
}

FrequencyTable load_table_tsv(std::istream& in) {
    FrequencyTable table;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const std::size_t tab = line.find('\t');
        if (tab == std::string::npos) {
            throw ValidationError("fixture line " + std::to_string(line_no) + " is not key<TAB>count");
        }
        const std::string key = line.substr(0, tab);
        if (table.entries().contains(key)) {
            throw ValidationError("duplicate key '" + key + "' at fixture line " + std::to_string(line_no));
        }
        uint64_t count = 0;
        try {
            count = std::stoull(line.substr(tab + 1));
        } catch (const std::exception&) {
            throw ValidationError("bad count at fixture line " + std::to_string(line_no));
        }
        table.add(key, count);
    }
    return table;
}

FrequencyTable load_table_tsv_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open fixture table: " + path);
    }
    return load_table_tsv(in);
}

}  // namespace helixcipher
