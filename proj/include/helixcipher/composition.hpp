#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "helixcipher/genome_io.hpp"

namespace helixcipher {

/// Per-base tallies of one turn window, in A, T, G, C order.
struct TurnComposition {
    uint32_t n_a = 0;
    uint32_t n_t = 0;
    uint32_t n_g = 0;
    uint32_t n_c = 0;

    std::array<uint32_t, 4> counts() const { return {n_a, n_t, n_g, n_c}; }
    uint32_t sum() const { return n_a + n_t + n_g + n_c; }
    bool operator==(const TurnComposition&) const = default;
};

/// The permutation-invariant form of a composition: its four counts
/// sorted ascending. Rendered as a digit string while every count fits
/// one digit ("0055"), and as a dash-joined tuple otherwise
/// ("0-0-0-10") since digit strings become ambiguous at two digits.
class CompositionClass {
public:
    /// Sorts the given counts; accepts them in any order.
    explicit CompositionClass(std::array<uint32_t, 4> counts);

    /// Parses a rendered key. Raises ValidationError on anything that
    /// is not a canonical (non-decreasing) key.
    static CompositionClass from_key(std::string_view key);

    const std::array<uint32_t, 4>& counts() const { return counts_; }
    uint32_t sum() const { return counts_[0] + counts_[1] + counts_[2] + counts_[3]; }
    std::string key() const;

    bool operator==(const CompositionClass&) const = default;
    auto operator<=>(const CompositionClass&) const = default;

private:
    std::array<uint32_t, 4> counts_{};  // ascending
};

/// Exact symbol tallies of a validated ACGT window.
TurnComposition compose(const TurnWindow& window);
TurnComposition compose(std::string_view bases);

/// Canonicalizes a composition; invariant under any permutation of the
/// four counts.
CompositionClass classify(const TurnComposition& comp);

/// All multisets of 4 non-negative integers, each at most max_count,
/// summing to window_size; ordered lexicographically by key. Raises
/// PreconditionError on parameters that admit no class.
std::vector<CompositionClass> enumerate_classes(uint32_t window_size, uint32_t max_count);

/// Number of distinct ordered 4-tuples realizing the class: the
/// multinomial 4!/prod(multiplicity of each repeated count)!.
uint32_t permutation_count(const CompositionClass& cls);

}  // namespace helixcipher
