#include "helixcipher/significance.hpp"

#include <algorithm>
#include <array>
#include <thread>

#include "helixcipher/errors.hpp"

namespace helixcipher {

const char* kRngAlgorithm = "mt19937_64+splitmix64-substream";

const char* to_string(NullModel model) {
    return model == NullModel::kShuffleStream ? "shuffle-stream" : "resample-letters";
}

NullModel parse_null_model(const std::string& name) {
    if (name == "shuffle-stream") return NullModel::kShuffleStream;
    if (name == "resample-letters") return NullModel::kResampleLetters;
    throw ValidationError("unknown null model: '" + name +
                          "' (available: shuffle-stream, resample-letters)");
}

const LengthClassStats& NullModelResult::length_class(const std::string& label) const {
    for (const auto& cls : classes) {
        if (cls.label == label) return cls;
    }
    throw PreconditionError("no length class '" + label + "' in result");
}

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

uint64_t trial_seed(uint64_t seed, uint64_t trial_index) {
    return splitmix64(seed ^ splitmix64(trial_index + 1));
}

uint64_t bounded_uniform(std::mt19937_64& rng, uint64_t n) {
    const uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
        const uint64_t r = rng();
        if (r >= threshold) return r % n;
    }
}

std::string shuffle_stream_trial(std::string text, std::mt19937_64& rng) {
    for (std::size_t i = text.size(); i > 1; --i) {
        const uint64_t j = bounded_uniform(rng, i);
        std::swap(text[i - 1], text[j]);
    }
    return text;
}

std::string resample_letters_trial(const std::string& observed_text, std::size_t length,
                                   std::mt19937_64& rng) {
    if (observed_text.empty()) {
        throw PreconditionError("cannot resample from an empty text");
    }
    // Cumulative letter counts; a draw in [0, total) lands in one letter's slab.
    std::array<uint64_t, 26> cumulative{};
    uint64_t total = 0;
    std::array<uint64_t, 26> counts{};
    for (char c : observed_text) {
        if (c < 'A' || c > 'Z') {
            throw PreconditionError("observed text contains a symbol outside A-Z");
        }
        ++counts[c - 'A'];
    }
    for (std::size_t i = 0; i < 26; ++i) {
        total += counts[i];
        cumulative[i] = total;
    }
    std::string out(length, 'A');
    for (auto& slot : out) {
        const uint64_t draw = bounded_uniform(rng, total);
        const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), draw);
        slot = static_cast<char>('A' + (it - cumulative.begin()));
    }
    return out;
}

namespace {

constexpr std::size_t kBucketCount = 4;  // "3", "4", "5", "6+"

int bucket_of(std::size_t word_length) {
    if (word_length < 3) return -1;
    if (word_length <= 5) return static_cast<int>(word_length - 3);
    return 3;
}

std::array<uint64_t, kBucketCount> count_by_bucket(std::string_view text,
                                                   const MultiPatternScanner& scanner) {
    std::array<uint64_t, kBucketCount> buckets{};
    scanner.scan(text, [&](std::size_t, uint32_t word_index) {
        const int b = bucket_of(scanner.words()[word_index].size());
        if (b >= 0) ++buckets[static_cast<std::size_t>(b)];
    });
    return buckets;
}

}  // namespace

NullModelResult run_null_model(const std::vector<std::string>& class_stream,
                               const SubstitutionTable& mapping, const Dictionary& dict,
                               NullModel model, uint64_t trials, uint64_t seed, unsigned threads) {
    if (trials < 1) {
        throw PreconditionError("null model requires at least 1 trial");
    }
    const std::string decoded = apply_mapping(mapping, class_stream);
    if (decoded.empty()) {
        throw PreconditionError("null model requires a non-empty class stream");
    }

    std::vector<std::string> eligible;
    for (const auto& word : dict.words) {
        if (word.size() >= 3) eligible.push_back(word);
    }
    if (eligible.empty()) {
        throw PreconditionError("dictionary has no words of length >= 3 for the null model");
    }
    const MultiPatternScanner scanner(eligible);
    const auto observed = count_by_bucket(decoded, scanner);

    std::vector<std::array<uint64_t, kBucketCount>> trial_counts(trials);
    const auto run_trial = [&](uint64_t index) {
        std::mt19937_64 rng(trial_seed(seed, index));
        const std::string text = model == NullModel::kShuffleStream
                                     ? shuffle_stream_trial(decoded, rng)
                                     : resample_letters_trial(decoded, decoded.size(), rng);
        trial_counts[index] = count_by_bucket(text, scanner);
    };

    if (threads <= 1 || trials == 1) {
        for (uint64_t i = 0; i < trials; ++i) run_trial(i);
    } else {
        const unsigned workers = static_cast<unsigned>(std::min<uint64_t>(threads, trials));
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned t = 0; t < workers; ++t) {
            pool.emplace_back([&, t] {
                for (uint64_t i = t; i < trials; i += workers) run_trial(i);
            });
        }
        for (auto& worker : pool) worker.join();
    }

    NullModelResult result;
    result.model = model;
    result.rng_algorithm = kRngAlgorithm;
    result.seed = seed;
    result.trials = trials;
    result.text_length = decoded.size();

    static const char* kLabels[kBucketCount] = {"3", "4", "5", "6+"};
    LengthClassStats total;
    total.label = "total";
    total.null_counts.assign(trials, 0);
    for (std::size_t b = 0; b < kBucketCount; ++b) {
        LengthClassStats stats;
        stats.label = kLabels[b];
        stats.observed = observed[b];
        stats.null_counts.reserve(trials);
        uint64_t at_least = 0;
        for (uint64_t i = 0; i < trials; ++i) {
            const uint64_t count = trial_counts[i][b];
            stats.null_counts.push_back(count);
            total.null_counts[i] += count;
            if (count >= stats.observed) ++at_least;
        }
        stats.p_value = static_cast<double>(1 + at_least) / static_cast<double>(trials + 1);
        total.observed += stats.observed;
        result.classes.push_back(std::move(stats));
    }
    uint64_t total_at_least = 0;
    for (uint64_t count : total.null_counts) {
        if (count >= total.observed) ++total_at_least;
    }
    total.p_value = static_cast<double>(1 + total_at_least) / static_cast<double>(trials + 1);
    result.classes.push_back(std::move(total));
    return result;
}

}  // namespace helixcipher
