#include "helixcipher/word_search.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <limits>
#include <map>

#include "helixcipher/errors.hpp"

namespace helixcipher {

namespace {

constexpr uint32_t kInfinity = std::numeric_limits<uint32_t>::max() / 2;

int letter_index(char c) { return (c >= 'A' && c <= 'Z') ? c - 'A' : -1; }

bool canonical_match_order(const WordMatch& a, const WordMatch& b) {
    if (a.start != b.start) return a.start < b.start;
    if (a.cost != b.cost) return a.cost < b.cost;
    if (a.surface.size() != b.surface.size()) return a.surface.size() < b.surface.size();
    return a.word < b.word;
}

}  // namespace

bool Dictionary::contains(std::string_view word) const {
    return std::binary_search(words.begin(), words.end(), word);
}

Dictionary load_dictionary(std::istream& source, uint32_t min_len) {
    Dictionary dict;
    std::string line;
    while (std::getline(source, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string word;
        word.reserve(line.size());
        bool clean = true;
        for (char c : line) {
            if (c >= 'a' && c <= 'z') c = static_cast<char>(c - ('a' - 'A'));
            if (c == ' ' || c == '\t') continue;
            if (c < 'A' || c > 'Z') {
                clean = false;
                break;
            }
            word.push_back(c);
        }
        if (!clean || word.size() < min_len || word.empty()) continue;
        dict.words.push_back(std::move(word));
    }
    std::sort(dict.words.begin(), dict.words.end());
    dict.words.erase(std::unique(dict.words.begin(), dict.words.end()), dict.words.end());
    if (dict.words.empty()) {
        throw ValidationError("dictionary is empty after filtering (min length " +
                              std::to_string(min_len) + ")");
    }
    dict.min_len = static_cast<uint32_t>(dict.words.front().size());
    dict.max_len = 0;
    for (const auto& word : dict.words) {
        dict.min_len = std::min<uint32_t>(dict.min_len, word.size());
        dict.max_len = std::max<uint32_t>(dict.max_len, word.size());
    }
    return dict;
}

Dictionary load_dictionary_file(const std::string& path, uint32_t min_len) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open dictionary: " + path);
    }
    return load_dictionary(in, min_len);
}

const char* to_string(EditOpKind kind) {
    switch (kind) {
        case EditOpKind::kSubstitute: return "substitute";
        case EditOpKind::kDeleteFromText: return "delete";
        case EditOpKind::kInsertIntoText: return "insert";
        case EditOpKind::kTranspose: return "transpose";
    }
    return "?";
}

MultiPatternScanner::MultiPatternScanner(const std::vector<std::string>& words) : words_(words) {
    nodes_.emplace_back();
    nodes_.front().next.fill(-1);
    // Trie.
    for (uint32_t w = 0; w < words_.size(); ++w) {
        int32_t node = 0;
        for (char c : words_[w]) {
            const int idx = letter_index(c);
            if (idx < 0) {
                throw ValidationError("dictionary word '" + words_[w] + "' contains a non-letter");
            }
            if (nodes_[node].next[idx] < 0) {
                nodes_[node].next[idx] = static_cast<int32_t>(nodes_.size());
                nodes_.emplace_back();
                nodes_.back().next.fill(-1);
            }
            node = nodes_[node].next[idx];
        }
        nodes_[node].output_word = static_cast<int32_t>(w);
    }
    // Breadth-first failure pass; missing edges become goto edges.
    std::vector<int32_t> fail(nodes_.size(), 0);
    std::deque<int32_t> queue;
    for (int c = 0; c < 26; ++c) {
        const int32_t child = nodes_[0].next[c];
        if (child < 0) {
            nodes_[0].next[c] = 0;
        } else {
            fail[child] = 0;
            queue.push_back(child);
        }
    }
    while (!queue.empty()) {
        const int32_t node = queue.front();
        queue.pop_front();
        const int32_t f = fail[node];
        nodes_[node].output_link = nodes_[f].output_word >= 0 ? f : nodes_[f].output_link;
        for (int c = 0; c < 26; ++c) {
            const int32_t child = nodes_[node].next[c];
            if (child < 0) {
                nodes_[node].next[c] = nodes_[f].next[c];
            } else {
                fail[child] = nodes_[f].next[c];
                queue.push_back(child);
            }
        }
    }
}

void MultiPatternScanner::scan(std::string_view text,
                               const std::function<void(std::size_t, uint32_t)>& cb) const {
    int32_t node = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const int idx = letter_index(text[i]);
        if (idx < 0) {
            throw ValidationError("text contains a symbol outside A-Z at offset " + std::to_string(i));
        }
        node = nodes_[node].next[idx];
        for (int32_t hit = node; hit >= 0; hit = nodes_[hit].output_link) {
            if (nodes_[hit].output_word >= 0) cb(i + 1, static_cast<uint32_t>(nodes_[hit].output_word));
        }
    }
}

std::vector<WordMatch> scan_exact(std::string_view text, const MultiPatternScanner& scanner) {
    std::vector<WordMatch> matches;
    scanner.scan(text, [&](std::size_t end, uint32_t word_index) {
        const std::string& word = scanner.words()[word_index];
        WordMatch match;
        match.start = end - word.size();
        match.surface = word;
        match.word = word;
        matches.push_back(std::move(match));
    });
    std::sort(matches.begin(), matches.end(), canonical_match_order);
    return matches;
}

std::vector<WordMatch> scan_exact(std::string_view text, const Dictionary& dict) {
    return scan_exact(text, MultiPatternScanner(dict.words));
}

std::vector<PhraseMatch> assemble_phrases(const std::vector<WordMatch>& matches, uint32_t max_gap) {
    std::vector<PhraseMatch> phrases;
    if (matches.size() < 2) return phrases;

    std::vector<const WordMatch*> sorted;
    sorted.reserve(matches.size());
    for (const auto& m : matches) sorted.push_back(&m);
    std::sort(sorted.begin(), sorted.end(), [](const WordMatch* a, const WordMatch* b) {
        if (a->start != b->start) return a->start < b->start;
        if (a->surface.size() != b->surface.size()) return a->surface.size() > b->surface.size();
        return a->word < b->word;
    });

    std::vector<uint64_t> starts, ends;
    starts.reserve(sorted.size());
    ends.reserve(sorted.size());
    for (const auto* m : sorted) starts.push_back(m->start);
    for (const auto* m : sorted) ends.push_back(m->end());
    std::sort(ends.begin(), ends.end());

    // A match heads a chain when no other match could precede it within
    // the gap limit: no end in [start - max_gap, start].
    const auto has_predecessor = [&](const WordMatch& m) {
        const uint64_t low = m.start > max_gap ? m.start - max_gap : 0;
        const auto it = std::lower_bound(ends.begin(), ends.end(), low);
        return it != ends.end() && *it <= m.start;
    };
    // Greedy continuation: earliest eligible start; the sort order makes
    // that the longest surface on start ties.
    const auto successor = [&](const WordMatch& m) -> const WordMatch* {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), m.end(),
                                   [](const WordMatch* a, uint64_t value) { return a->start < value; });
        if (it == sorted.end() || (*it)->start > m.end() + max_gap) return nullptr;
        return *it;
    };

    for (const auto* head : sorted) {
        if (has_predecessor(*head)) continue;
        PhraseMatch phrase;
        phrase.members.push_back(*head);
        uint32_t widest = 0;
        for (const WordMatch* current = head;;) {
            const WordMatch* next = successor(*current);
            if (!next) break;
            widest = std::max<uint32_t>(widest, static_cast<uint32_t>(next->start - current->end()));
            phrase.members.push_back(*next);
            current = next;
        }
        if (phrase.members.size() < 2) continue;
        phrase.span_start = phrase.members.front().start;
        phrase.span_end = phrase.members.back().end();
        phrase.gap = widest;
        phrases.push_back(std::move(phrase));
    }
    return phrases;
}

namespace {

// D[j][k] = distance between surface prefix t[0..j) and word prefix
// w[0..k). Rows walk the surface so one sweep scores every window
// length at once.
struct OsaMatrix {
    std::size_t columns;
    std::vector<uint32_t> cells;

    OsaMatrix(std::size_t rows, std::size_t cols) : columns(cols), cells(rows * cols, 0) {}
    uint32_t& at(std::size_t j, std::size_t k) { return cells[j * columns + k]; }
    uint32_t at(std::size_t j, std::size_t k) const { return cells[j * columns + k]; }
};

void fill_osa_row(OsaMatrix& dp, std::string_view t, std::string_view w, std::size_t j) {
    const std::size_t m = w.size();
    dp.at(j, 0) = static_cast<uint32_t>(j);
    for (std::size_t k = 1; k <= m; ++k) {
        const uint32_t subst = dp.at(j - 1, k - 1) + (t[j - 1] == w[k - 1] ? 0 : 1);
        const uint32_t erase = dp.at(j - 1, k) + 1;
        const uint32_t insert = dp.at(j, k - 1) + 1;
        uint32_t best = std::min({subst, erase, insert});
        if (j >= 2 && k >= 2 && t[j - 1] == w[k - 2] && t[j - 2] == w[k - 1]) {
            best = std::min(best, dp.at(j - 2, k - 2) + 1);
        }
        dp.at(j, k) = best;
    }
}

}  // namespace

uint32_t osa_distance(std::string_view surface, std::string_view word) {
    OsaMatrix dp(surface.size() + 1, word.size() + 1);
    for (std::size_t k = 0; k <= word.size(); ++k) dp.at(0, k) = static_cast<uint32_t>(k);
    for (std::size_t j = 1; j <= surface.size(); ++j) fill_osa_row(dp, surface, word, j);
    return dp.at(surface.size(), word.size());
}

Alignment osa_align(std::string_view surface, std::string_view word) {
    OsaMatrix dp(surface.size() + 1, word.size() + 1);
    for (std::size_t k = 0; k <= word.size(); ++k) dp.at(0, k) = static_cast<uint32_t>(k);
    for (std::size_t j = 1; j <= surface.size(); ++j) fill_osa_row(dp, surface, word, j);

    Alignment result;
    result.cost = dp.at(surface.size(), word.size());
    std::size_t j = surface.size();
    std::size_t k = word.size();
    while (j > 0 || k > 0) {
        const uint32_t here = dp.at(j, k);
        if (j > 0 && k > 0 && surface[j - 1] == word[k - 1] && dp.at(j - 1, k - 1) == here) {
            --j;
            --k;
            continue;
        }
        if (j >= 2 && k >= 2 && surface[j - 1] == word[k - 2] && surface[j - 2] == word[k - 1] &&
            dp.at(j - 2, k - 2) + 1 == here) {
            result.ops.push_back({EditOpKind::kTranspose, static_cast<uint32_t>(j - 2)});
            j -= 2;
            k -= 2;
            continue;
        }
        if (j > 0 && k > 0 && dp.at(j - 1, k - 1) + 1 == here) {
            result.ops.push_back({EditOpKind::kSubstitute, static_cast<uint32_t>(j - 1)});
            --j;
            --k;
            continue;
        }
        if (j > 0 && dp.at(j - 1, k) + 1 == here) {
            result.ops.push_back({EditOpKind::kDeleteFromText, static_cast<uint32_t>(j - 1)});
            --j;
            continue;
        }
        result.ops.push_back({EditOpKind::kInsertIntoText, static_cast<uint32_t>(j)});
        --k;
    }
    std::reverse(result.ops.begin(), result.ops.end());
    return result;
}

std::vector<WordMatch> scan_reconstruction(std::string_view text, const Dictionary& dict,
                                           uint32_t budget, uint32_t window_slack,
                                           uint32_t min_word_len, bool include_exact) {
    if (budget < 1) {
        throw PreconditionError("reconstruction budget must be at least 1");
    }
    std::vector<WordMatch> matches;
    OsaMatrix dp(1, 1);

    for (const auto& word : dict.words) {
        const std::size_t m = word.size();
        if (m < min_word_len) continue;
        const std::size_t len_min = m > window_slack ? m - window_slack : 1;
        const std::size_t len_max = m + window_slack;
        if (text.size() < len_min) continue;

        dp = OsaMatrix(len_max + 1, m + 1);
        for (std::size_t k = 0; k <= m; ++k) dp.at(0, k) = static_cast<uint32_t>(k);

        for (std::size_t start = 0; start + len_min <= text.size(); ++start) {
            const std::size_t avail = std::min(len_max, text.size() - start);
            const std::string_view window = text.substr(start, avail);
            uint32_t best_cost = kInfinity;
            std::size_t best_len = 0;
            // Tie order: cheapest, then length closest to the word's,
            // then shorter, so an equal-cost REAML beats REAM for REALM.
            const auto better = [m](uint32_t cost, std::size_t len, uint32_t bcost, std::size_t blen) {
                if (cost != bcost) return cost < bcost;
                const auto drift = [m](std::size_t len2) { return len2 > m ? len2 - m : m - len2; };
                if (drift(len) != drift(blen)) return drift(len) < drift(blen);
                return len < blen;
            };
            uint32_t prev_row_min = 0;
            for (std::size_t j = 1; j <= avail; ++j) {
                fill_osa_row(dp, window, word, j);
                uint32_t row_min = kInfinity;
                for (std::size_t k = 0; k <= m; ++k) row_min = std::min(row_min, dp.at(j, k));
                if (j >= len_min) {
                    const uint32_t cost = dp.at(j, m);
                    if (best_cost == kInfinity || better(cost, j, best_cost, best_len)) {
                        best_cost = cost;
                        best_len = j;
                    }
                }
                // A transposition can hop one row, not two.
                if (row_min > budget && prev_row_min > budget) break;
                prev_row_min = row_min;
            }
            if (best_cost > budget || (best_cost == 0 && !include_exact)) continue;
            WordMatch match;
            match.start = start;
            match.surface = std::string(window.substr(0, best_len));
            match.word = word;
            match.cost = best_cost;
            match.ops = osa_align(match.surface, word).ops;
            matches.push_back(std::move(match));
        }
    }
    std::sort(matches.begin(), matches.end(), canonical_match_order);
    return matches;
}

std::vector<LengthSummaryRow> summarize_by_length(const std::vector<WordMatch>& exact,
                                                  const std::vector<WordMatch>& reconstructed) {
    std::map<uint32_t, LengthSummaryRow> rows;
    for (const auto& m : exact) {
        auto& row = rows.try_emplace(static_cast<uint32_t>(m.word.size()),
                                     LengthSummaryRow{static_cast<uint32_t>(m.word.size()), 0, 0})
                        .first->second;
        ++row.exact_count;
    }
    for (const auto& m : reconstructed) {
        auto& row = rows.try_emplace(static_cast<uint32_t>(m.word.size()),
                                     LengthSummaryRow{static_cast<uint32_t>(m.word.size()), 0, 0})
                        .first->second;
        ++row.reconstruction_count;
    }
    std::vector<LengthSummaryRow> out;
    out.reserve(rows.size());
    for (const auto& [len, row] : rows) out.push_back(row);
    return out;
}

}  // namespace helixcipher
