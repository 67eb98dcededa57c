#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace helixcipher {

/// Uppercase word list. Lines with non-alphabetic characters are
/// dropped on load, as are words shorter than min_len.
struct Dictionary {
    std::vector<std::string> words;  ///< sorted, unique, uppercase A-Z
    uint32_t min_len = 0;
    uint32_t max_len = 0;

    std::size_t size() const { return words.size(); }
    bool contains(std::string_view word) const;
};

Dictionary load_dictionary(std::istream& source, uint32_t min_len = 1);
Dictionary load_dictionary_file(const std::string& path, uint32_t min_len = 1);

enum class EditOpKind : uint8_t { kSubstitute, kDeleteFromText, kInsertIntoText, kTranspose };

/// One repair step; pos is a 0-based offset into the matched surface.
struct EditOp {
    EditOpKind kind;
    uint32_t pos;
    bool operator==(const EditOp&) const = default;
};

const char* to_string(EditOpKind kind);

/// A dictionary hit in the decoded text. cost is 0 exactly when the
/// surface equals the word.
struct WordMatch {
    uint64_t start = 0;    ///< 0-based offset in the decoded text
    std::string surface;   ///< matched substring
    std::string word;      ///< dictionary entry
    uint32_t cost = 0;
    std::vector<EditOp> ops;

    uint64_t end() const { return start + surface.size(); }  ///< exclusive
};

/// A chain of closely aggregated word matches.
struct PhraseMatch {
    std::vector<WordMatch> members;  ///< non-overlapping, increasing offsets
    uint64_t span_start = 0;
    uint64_t span_end = 0;  ///< exclusive
    uint32_t gap = 0;       ///< largest inter-word gap inside the chain
};

/// Aho-Corasick automaton over A-Z, shared by exact scans so the
/// dictionary is compiled once per run instead of once per text.
class MultiPatternScanner {
public:
    explicit MultiPatternScanner(const std::vector<std::string>& words);

    /// Invokes cb(end_offset_exclusive, word_index) for every
    /// occurrence of every word, overlapping hits included. Raises
    /// ValidationError on symbols outside A-Z.
    void scan(std::string_view text, const std::function<void(std::size_t, uint32_t)>& cb) const;

    const std::vector<std::string>& words() const { return words_; }

private:
    struct Node {
        std::array<int32_t, 26> next;
        int32_t output_word = -1;  ///< word ending here, -1 if none
        int32_t output_link = -1;  ///< nearest suffix node with output
    };
    std::vector<Node> nodes_;
    std::vector<std::string> words_;
};

/// Every occurrence of every dictionary word as a contiguous substring
/// of the text, at all offsets, overlapping hits included; cost 0.
std::vector<WordMatch> scan_exact(std::string_view text, const Dictionary& dict);
std::vector<WordMatch> scan_exact(std::string_view text, const MultiPatternScanner& scanner);

/// Chains non-overlapping matches whose inter-word gaps stay within
/// max_gap. A chain starts at any match with no possible predecessor
/// and extends greedily (earliest next start, then longest surface);
/// only chains of two or more members are reported.
std::vector<PhraseMatch> assemble_phrases(const std::vector<WordMatch>& matches, uint32_t max_gap);

/// Restricted (adjacent-transposition) edit distance between a text
/// surface and a word, unit costs for substitution, deletion from the
/// text, insertion into the text, and adjacent transposition.
uint32_t osa_distance(std::string_view surface, std::string_view word);

struct Alignment {
    uint32_t cost = 0;
    std::vector<EditOp> ops;
};
/// Distance plus one canonical minimal edit script.
Alignment osa_align(std::string_view surface, std::string_view word);

/// Near-miss scan: substrings of length |word| +/- window_slack whose
/// restricted edit distance to a dictionary word is in (0, budget].
/// For each (word, start) only the cheapest window survives (on ties,
/// the one whose length is closest to the word's); cost-0 hits belong
/// to scan_exact and are excluded unless include_exact is set. Words
/// shorter than min_word_len are skipped.
std::vector<WordMatch> scan_reconstruction(std::string_view text, const Dictionary& dict,
                                           uint32_t budget, uint32_t window_slack,
                                           uint32_t min_word_len = 3, bool include_exact = false);

/// Per-word-length exact/reconstruction counts for reports.
struct LengthSummaryRow {
    uint32_t length;
    uint64_t exact_count;
    uint64_t reconstruction_count;
};
std::vector<LengthSummaryRow> summarize_by_length(const std::vector<WordMatch>& exact,
                                                  const std::vector<WordMatch>& reconstructed);

}  // namespace helixcipher
