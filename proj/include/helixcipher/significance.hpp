#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "helixcipher/substitution.hpp"
#include "helixcipher/word_search.hpp"

namespace helixcipher {

/// Null models for the word-yield control.
/// kShuffleStream permutes the observed class stream each trial, which
/// preserves the decoded letter histogram exactly; kResampleLetters
/// draws letters i.i.d. from the decoded text's letter frequencies.
enum class NullModel { kShuffleStream, kResampleLetters };

const char* to_string(NullModel model);
NullModel parse_null_model(const std::string& name);

/// Identifier of the generator scheme recorded in every result:
/// trial i draws from mt19937_64 seeded with a splitmix64-derived
/// sub-seed of (seed, i), so results do not depend on thread count.
extern const char* kRngAlgorithm;

struct LengthClassStats {
    std::string label;  ///< "3", "4", "5", "6+" or "total"
    uint64_t observed = 0;
    std::vector<uint64_t> null_counts;  ///< per trial, by trial index
    double p_value = 1.0;               ///< (1 + #{trials >= observed}) / (trials + 1)
};

struct NullModelResult {
    NullModel model = NullModel::kShuffleStream;
    std::string rng_algorithm;
    uint64_t seed = 0;
    uint64_t trials = 0;
    uint64_t text_length = 0;
    std::vector<LengthClassStats> classes;

    const LengthClassStats& length_class(const std::string& label) const;
};

/// Scatters seed bits; the standard splitmix64 finalizer.
uint64_t splitmix64(uint64_t x);
/// Sub-seed for one trial; independent of execution order.
uint64_t trial_seed(uint64_t seed, uint64_t trial_index);
/// Unbiased draw in [0, n) using only mt19937_64 outputs, so results
/// are identical across platforms and standard libraries.
uint64_t bounded_uniform(std::mt19937_64& rng, uint64_t n);

/// In-place Fisher-Yates permutation of the decoded text. Permuting the
/// class stream and decoding is position-wise identical, so the letter
/// histogram is preserved exactly.
std::string shuffle_stream_trial(std::string text, std::mt19937_64& rng);

/// i.i.d. letters drawn from the observed text's letter distribution.
std::string resample_letters_trial(const std::string& observed_text, std::size_t length,
                                   std::mt19937_64& rng);

/// Decodes the class stream, counts exact dictionary hits per word
/// length (3, 4, 5, 6+; shorter words are ignored), then compares
/// against `trials` randomized texts. Deterministic for fixed
/// (inputs, seed) at any thread count.
NullModelResult run_null_model(const std::vector<std::string>& class_stream,
                               const SubstitutionTable& mapping, const Dictionary& dict,
                               NullModel model, uint64_t trials, uint64_t seed,
                               unsigned threads = 1);

}  // namespace helixcipher
