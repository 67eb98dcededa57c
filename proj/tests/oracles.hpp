#pragma once

// Test-only reference implementations, deliberately independent of the
// library code paths they check.

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace oracle {

/// All composition classes for (window_size, max_count) by exhaustive
/// enumeration of ordered 4-tuples, with the number of ordered tuples
/// realizing each sorted key.
inline std::map<std::array<uint32_t, 4>, uint32_t> brute_force_classes(uint32_t window_size,
                                                                       uint32_t max_count) {
    std::map<std::array<uint32_t, 4>, uint32_t> classes;
    for (uint32_t a = 0; a <= max_count; ++a)
        for (uint32_t b = 0; b <= max_count; ++b)
            for (uint32_t c = 0; c <= max_count; ++c)
                for (uint32_t d = 0; d <= max_count; ++d) {
                    if (a + b + c + d != window_size) continue;
                    std::array<uint32_t, 4> key = {a, b, c, d};
                    std::sort(key.begin(), key.end());
                    ++classes[key];
                }
    return classes;
}

/// Position-by-position substring scan; the reference for scan_exact.
inline std::vector<std::pair<std::size_t, std::string>> naive_scan(
    std::string_view text, const std::vector<std::string>& words) {
    std::vector<std::pair<std::size_t, std::string>> hits;
    for (const auto& word : words) {
        if (word.empty() || word.size() > text.size()) continue;
        for (std::size_t start = 0; start + word.size() <= text.size(); ++start) {
            if (text.compare(start, word.size(), word) == 0) hits.emplace_back(start, word);
        }
    }
    std::sort(hits.begin(), hits.end());
    return hits;
}

/// Memoized recursive restricted edit distance (substitution, deletion,
/// insertion, adjacent transposition, all unit cost).
inline uint32_t reference_osa(std::string_view a, std::string_view b) {
    const std::size_t n = a.size();
    const std::size_t m = b.size();
    std::vector<int64_t> memo((n + 1) * (m + 1), -1);
    const auto solve = [&](auto&& self, std::size_t i, std::size_t j) -> uint32_t {
        int64_t& slot = memo[i * (m + 1) + j];
        if (slot >= 0) return static_cast<uint32_t>(slot);
        uint32_t best;
        if (i == 0) {
            best = static_cast<uint32_t>(j);
        } else if (j == 0) {
            best = static_cast<uint32_t>(i);
        } else {
            best = self(self, i - 1, j - 1) + (a[i - 1] == b[j - 1] ? 0 : 1);
            best = std::min(best, self(self, i - 1, j) + 1);
            best = std::min(best, self(self, i, j - 1) + 1);
            if (i >= 2 && j >= 2 && a[i - 1] == b[j - 2] && a[i - 2] == b[j - 1]) {
                best = std::min(best, self(self, i - 2, j - 2) + 1);
            }
        }
        slot = best;
        return best;
    };
    return solve(solve, n, m);
}

/// Deterministic random uppercase text over the first `alphabet`
/// letters of A-Z.
inline std::string random_letters(std::mt19937_64& rng, std::size_t length, unsigned alphabet = 26) {
    std::string text(length, 'A');
    for (auto& c : text) c = static_cast<char>('A' + rng() % alphabet);
    return text;
}

inline std::string random_bases(std::mt19937_64& rng, std::size_t length) {
    static const char kBases[4] = {'A', 'C', 'G', 'T'};
    std::string text(length, 'A');
    for (auto& c : text) c = kBases[rng() % 4];
    return text;
}

}  // namespace oracle
