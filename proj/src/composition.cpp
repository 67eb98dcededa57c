#include "helixcipher/composition.hpp"

#include <algorithm>
#include <charconv>

#include "helixcipher/errors.hpp"

namespace helixcipher {

namespace {

uint32_t parse_component(std::string_view text) {
    uint32_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw ValidationError("malformed class key component: '" + std::string(text) + "'");
    }
    return value;
}

}  // namespace

CompositionClass::CompositionClass(std::array<uint32_t, 4> counts) : counts_(counts) {
    std::sort(counts_.begin(), counts_.end());
}

CompositionClass CompositionClass::from_key(std::string_view key) {
    std::array<uint32_t, 4> counts{};
    if (key.find('-') != std::string_view::npos) {
        std::size_t part = 0;
        std::size_t begin = 0;
        while (part < 4) {
            const std::size_t dash = key.find('-', begin);
            const bool last = part == 3;
            if (last != (dash == std::string_view::npos)) {
                throw ValidationError("class key must have 4 components: '" + std::string(key) + "'");
            }
            counts[part++] = parse_component(key.substr(begin, last ? key.size() - begin : dash - begin));
            begin = last ? key.size() : dash + 1;
        }
    } else {
        if (key.size() != 4) {
            throw ValidationError("class key must have 4 components: '" + std::string(key) + "'");
        }
        for (std::size_t i = 0; i < 4; ++i) {
            if (key[i] < '0' || key[i] > '9') {
                throw ValidationError("malformed class key: '" + std::string(key) + "'");
            }
            counts[i] = static_cast<uint32_t>(key[i] - '0');
        }
    }
    if (!std::is_sorted(counts.begin(), counts.end())) {
        throw ValidationError("class key components must be non-decreasing: '" + std::string(key) + "'");
    }
    return CompositionClass(counts);
}

std::string CompositionClass::key() const {
    if (counts_[3] <= 9) {
        std::string key(4, '0');
        for (std::size_t i = 0; i < 4; ++i) key[i] = static_cast<char>('0' + counts_[i]);
        return key;
    }
    std::string key;
    for (std::size_t i = 0; i < 4; ++i) {
        if (i) key.push_back('-');
        key += std::to_string(counts_[i]);
    }
    return key;
}

TurnComposition compose(std::string_view bases) {
    TurnComposition comp;
    for (char c : bases) {
        switch (c) {
            case 'A': ++comp.n_a; break;
            case 'T': ++comp.n_t; break;
            case 'G': ++comp.n_g; break;
            case 'C': ++comp.n_c; break;
            default:
                throw PreconditionError("window contains unvalidated symbol '" + std::string(1, c) + "'");
        }
    }
    return comp;
}

TurnComposition compose(const TurnWindow& window) { return compose(std::string_view(window.bases)); }

CompositionClass classify(const TurnComposition& comp) { return CompositionClass(comp.counts()); }

std::vector<CompositionClass> enumerate_classes(uint32_t window_size, uint32_t max_count) {
    if (window_size < 1 || max_count < 1 || max_count > window_size) {
        throw PreconditionError("enumerate_classes requires 1 <= max_count <= window_size (got " +
                                std::to_string(max_count) + ", " + std::to_string(window_size) + ")");
    }
    std::vector<CompositionClass> classes;
    // Ascending loops emit keys in lexicographic (component-tuple) order.
    for (uint32_t a = 0; a <= max_count; ++a) {
        for (uint32_t b = a; b <= max_count; ++b) {
            for (uint32_t c = b; c <= max_count; ++c) {
                const uint64_t partial = static_cast<uint64_t>(a) + b + c;
                if (partial > window_size) break;
                const uint32_t d = window_size - static_cast<uint32_t>(partial);
                if (d < c || d > max_count) continue;
                classes.push_back(CompositionClass({a, b, c, d}));
            }
        }
    }
    if (classes.empty()) {
        throw PreconditionError("no composition class has 4 counts <= " + std::to_string(max_count) +
                                " summing to " + std::to_string(window_size));
    }
    return classes;
}

uint32_t permutation_count(const CompositionClass& cls) {
    const auto& c = cls.counts();
    uint32_t result = 24;
    uint32_t run = 1;
    for (std::size_t i = 1; i < 4; ++i) {
        if (c[i] == c[i - 1]) {
            ++run;
            result /= run;  // divides 24 by multiplicity! incrementally
        } else {
            run = 1;
        }
    }
    return result;
}

}  // namespace helixcipher
