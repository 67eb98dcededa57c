#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "helixcipher/frequency.hpp"
#include "helixcipher/genome_io.hpp"
#include "helixcipher/report.hpp"
#include "helixcipher/significance.hpp"
#include "helixcipher/substitution.hpp"
#include "helixcipher/word_search.hpp"

namespace helixcipher {

/// Everything a subcommand needs; echoed verbatim into report headers.
struct RunConfig {
    std::string subcommand;

    // inputs
    std::string genome_path;
    std::string class_fixture;   ///< "fig1a" replaces the genome tally (tables only)
    std::string corpus_path;
    std::string letter_fixture = "fig1b";
    std::string dict_path;
    std::string mapping;         ///< TSV path or "fig2"; empty builds from tallies
    std::string text_path;       ///< search an existing decoded text instead of a genome

    // windowing
    uint64_t anchor = 168900;
    uint64_t count = 3183;
    Direction direction = Direction::kBackward;
    uint32_t window_size = 10;
    bool skip_ambiguous = false;

    // letters
    std::string omit = "C,Q,V,X,Z";

    // word search
    uint32_t budget = 2;
    uint32_t max_gap = 3;
    uint32_t min_len = 1;

    // null model
    uint64_t trials = 1000;
    uint64_t seed = 42;
    std::string model = "shuffle-stream";
    unsigned threads = 1;

    // enumerate
    uint32_t max_count = 8;

    // output
    std::string out_dir;  ///< empty: stdout for decode/enumerate, "." otherwise
    bool variant_diff = false;

    std::string echo() const;  ///< canonical key=value line for headers
};

/// The assembled pipeline state shared by decode/search/simulate.
struct Pipeline {
    GenomeSequence sequence;
    uint64_t dropped_windows = 0;
    std::vector<std::string> class_stream;  ///< class key per window, emission order
    FrequencyTable class_tally;
    FrequencyTable letter_table;
    SubstitutionTable mapping;
    std::string decoded;
    std::vector<InputRecord> inputs;  ///< for report headers
};

Pipeline build_pipeline(const RunConfig& config);

/// One windowing variant tried when diffing a genome tally against the
/// fig1a reference counts: both walk directions crossed with both
/// anchor frames (the configured anchor and the sequence boundary).
struct WindowingVariant {
    std::string name;
    Direction direction;
    uint64_t anchor;
    bool feasible = true;
};

struct VariantDiff {
    WindowingVariant variant;
    FrequencyTable tally;
    uint64_t l1_distance = 0;  ///< sum of |count - reference| over the key union
    bool exact = false;
};

std::vector<WindowingVariant> windowing_variants(const GenomeSequence& seq, const RunConfig& config);
std::vector<VariantDiff> run_variant_diff(const GenomeSequence& seq, const RunConfig& config,
                                          const FrequencyTable& reference);
void write_variant_diff_tsv(std::ostream& out, const RunConfig& config,
                            const std::vector<VariantDiff>& diffs, const FrequencyTable& reference);
/// Index of the variant closest to the reference (smallest L1).
std::size_t closest_variant(const std::vector<VariantDiff>& diffs);

// Subcommands. Each writes its reports under config.out_dir and throws
// Error subclasses on failure; exit-code mapping happens in run_cli.
void cmd_tables(const RunConfig& config);
void cmd_decode(const RunConfig& config, std::ostream& stdout_stream);
void cmd_search(const RunConfig& config);
void cmd_simulate(const RunConfig& config);
void cmd_enumerate(const RunConfig& config, std::ostream& stdout_stream);

/// Parses argv, dispatches, maps Error subclasses to exit codes
/// (validation 2, precondition 3, I/O 4).
int run_cli(int argc, const char* const* argv);

}  // namespace helixcipher
