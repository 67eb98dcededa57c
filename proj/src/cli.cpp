#include "helixcipher/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "helixcipher/composition.hpp"
#include "helixcipher/errors.hpp"
#include "helixcipher/fixtures.hpp"
#include "helixcipher/report.hpp"
#include "helixcipher/version.hpp"

namespace helixcipher {

namespace fs = std::filesystem;

namespace {

const char* direction_name(Direction d) {
    return d == Direction::kBackward ? "backward" : "forward";
}

Direction parse_direction(const std::string& name) {
    if (name == "backward") return Direction::kBackward;
    if (name == "forward") return Direction::kForward;
    throw ValidationError("unknown direction: '" + name + "' (forward|backward)");
}

void require_file(const std::string& path, const char* what) {
    if (path.empty()) return;
    if (!fs::exists(fs::path(path))) {
        throw ValidationError(std::string(what) + " file does not exist: " + path);
    }
}

std::ofstream open_output(const std::string& dir, const std::string& name) {
    fs::path target = dir.empty() ? fs::path(".") : fs::path(dir);
    std::error_code ec;
    fs::create_directories(target, ec);
    if (ec) {
        throw IoError("cannot create output directory: " + target.string());
    }
    target /= name;
    std::ofstream out(target, std::ios::binary);
    if (!out) {
        throw IoError("cannot write output file: " + target.string());
    }
    return out;
}

std::string read_file(const std::string& path, const char* what) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError(std::string("cannot open ") + what + ": " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string table_digest(const FrequencyTable& table) {
    std::ostringstream canon;
    for (const auto& [key, count] : table.entries()) canon << key << '\t' << count << '\n';
    return fnv1a64_hex(canon.str());
}

struct TableSource {
    FrequencyTable table;
    InputRecord record;
};

TableSource load_letter_source(const RunConfig& config) {
    TableSource source;
    if (!config.corpus_path.empty()) {
        require_file(config.corpus_path, "corpus");
        source.table = tally_letters(std::string_view(read_file(config.corpus_path, "corpus")),
                                     parse_omit_list(config.omit));
        source.record = {"corpus", config.corpus_path, file_digest(config.corpus_path)};
    } else {
        source.table = fixture_table(config.letter_fixture);
        source.record = {"letter-fixture", "fixture:" + config.letter_fixture, table_digest(source.table)};
    }
    return source;
}

SubstitutionTable resolve_mapping(const RunConfig& config, const FrequencyTable& class_tally,
                                  const FrequencyTable& letter_table,
                                  std::vector<InputRecord>& inputs) {
    if (config.mapping.empty()) {
        return build_mapping(class_tally, letter_table);
    }
    if (config.mapping == "fig2") {
        auto table = SubstitutionTable::from_pairs(fig2_reference_pairs());
        std::ostringstream canon;
        write_mapping_tsv(canon, table);
        inputs.push_back({"mapping", "fixture:fig2", fnv1a64_hex(canon.str())});
        return table;
    }
    require_file(config.mapping, "mapping");
    inputs.push_back({"mapping", config.mapping, file_digest(config.mapping)});
    return read_mapping_tsv_file(config.mapping);
}

AmbiguityPolicy policy_of(const RunConfig& config) {
    return config.skip_ambiguous ? AmbiguityPolicy::kSkipWindows : AmbiguityPolicy::kReject;
}

FastaLoad load_genome(const RunConfig& config) {
    if (config.genome_path.empty()) {
        throw ValidationError("this run needs --genome (or a fixture option where supported)");
    }
    require_file(config.genome_path, "genome");
    FastaLoad load = load_fasta_file(config.genome_path, policy_of(config));
    for (const auto& skipped : load.skipped_records) {
        std::cerr << "warning: skipping extra FASTA record '" << skipped << "' (single-record analysis)\n";
    }
    return load;
}

const std::map<std::string, const ClassReferenceRow*>& reference_by_key() {
    static const auto* index = [] {
        auto* map = new std::map<std::string, const ClassReferenceRow*>;
        for (const auto& row : fig1a_reference()) (*map)[row.key] = &row;
        return map;
    }();
    return *index;
}

void write_class_rows(std::ostream& out, const FrequencyTable& table) {
    out << "class\tfrequency\tprobability\tpermutations\treported_permutations\tdiff\n";
    const auto& reference = reference_by_key();
    for (const auto& key : rank_ascending(table, TieBreakPolicy::kClassLexicographic)) {
        const uint32_t computed = permutation_count(CompositionClass::from_key(key));
        const auto it = reference.find(key);
        out << key << '\t' << table.count(key) << '\t' << probability_4dp(table.count(key), table.total())
            << '\t' << computed << '\t';
        if (it != reference.end()) {
            out << it->second->reported_permutations << '\t'
                << (it->second->reported_permutations == computed ? "" : "*");
        } else {
            out << "-\t";
        }
        out << '\n';
    }
}

void write_letter_rows(std::ostream& out, const FrequencyTable& table) {
    out << "letter\tfrequency\tprobability\n";
    for (const auto& key : rank_ascending(table, TieBreakPolicy::kLetterConsonantBeforeVowel)) {
        out << key << '\t' << table.count(key) << '\t' << probability_4dp(table.count(key), table.total())
            << '\n';
    }
}

std::string format_ops(const std::vector<EditOp>& ops) {
    if (ops.empty()) return "-";
    std::string text;
    for (const auto& op : ops) {
        if (!text.empty()) text.push_back(',');
        text += to_string(op.kind);
        text.push_back('@');
        text += std::to_string(op.pos);
    }
    return text;
}

}  // namespace

std::string RunConfig::echo() const {
    std::ostringstream out;
    out << "subcommand=" << subcommand << " genome=" << genome_path
        << " class-fixture=" << class_fixture << " corpus=" << corpus_path
        << " letter-fixture=" << letter_fixture << " dict=" << dict_path << " mapping=" << mapping
        << " text=" << text_path << " anchor=" << anchor << " count=" << count
        << " direction=" << direction_name(direction) << " window-size=" << window_size
        << " skip-ambiguous=" << (skip_ambiguous ? 1 : 0) << " omit=" << omit
        << " budget=" << budget << " max-gap=" << max_gap << " min-len=" << min_len
        << " trials=" << trials << " seed=" << seed << " model=" << model << " threads=" << threads
        << " max-count=" << max_count;
    return out.str();
}

Pipeline build_pipeline(const RunConfig& config) {
    // Every referenced file must exist before any work starts.
    require_file(config.genome_path, "genome");
    require_file(config.corpus_path, "corpus");
    if (config.mapping != "fig2") require_file(config.mapping, "mapping");

    Pipeline pipeline;
    FastaLoad load = load_genome(config);
    pipeline.sequence = std::move(load.sequence);
    pipeline.inputs.push_back({"genome", config.genome_path, file_digest(config.genome_path)});

    auto extraction = extract_windows(pipeline.sequence, config.anchor, config.count,
                                      config.direction, config.window_size, policy_of(config));
    pipeline.dropped_windows = extraction.dropped;
    if (extraction.dropped > 0) {
        std::cerr << "warning: dropped " << extraction.dropped << " windows containing ambiguity codes\n";
    }

    pipeline.class_stream.reserve(extraction.windows.size());
    for (const auto& window : extraction.windows) {
        pipeline.class_stream.push_back(classify(compose(window)).key());
    }
    pipeline.class_tally = tally_classes(extraction.windows);
    TableSource letters = load_letter_source(config);
    pipeline.letter_table = std::move(letters.table);
    pipeline.inputs.push_back(std::move(letters.record));

    pipeline.mapping = resolve_mapping(config, pipeline.class_tally, pipeline.letter_table,
                                       pipeline.inputs);
    pipeline.decoded = apply_mapping(pipeline.mapping, pipeline.class_stream);
    return pipeline;
}

std::vector<WindowingVariant> windowing_variants(const GenomeSequence& seq, const RunConfig& config) {
    const uint64_t need = config.count * config.window_size;
    std::vector<WindowingVariant> variants;
    variants.push_back({"backward@anchor", Direction::kBackward, config.anchor, config.anchor >= need});
    variants.push_back({"backward@seq-end", Direction::kBackward, seq.length(), seq.length() >= need});
    const uint64_t mirror = config.anchor >= need ? config.anchor - need + 1 : 1;
    variants.push_back({"forward@mirror", Direction::kForward, mirror,
                        config.anchor >= need && mirror + need - 1 <= seq.length()});
    variants.push_back({"forward@1", Direction::kForward, 1, need <= seq.length()});
    return variants;
}

std::vector<VariantDiff> run_variant_diff(const GenomeSequence& seq, const RunConfig& config,
                                          const FrequencyTable& reference) {
    std::vector<VariantDiff> diffs;
    for (const auto& variant : windowing_variants(seq, config)) {
        VariantDiff diff;
        diff.variant = variant;
        if (variant.feasible) {
            const auto extraction = extract_windows(seq, variant.anchor, config.count, variant.direction,
                                                    config.window_size, policy_of(config));
            diff.tally = tally_classes(extraction.windows);
            uint64_t l1 = 0;
            for (const auto& [key, count] : diff.tally.entries()) {
                const uint64_t ref = reference.count(key);
                l1 += count > ref ? count - ref : ref - count;
            }
            for (const auto& [key, ref] : reference.entries()) {
                if (diff.tally.count(key) == 0) l1 += ref;
            }
            diff.l1_distance = l1;
            diff.exact = l1 == 0;
        }
        diffs.push_back(std::move(diff));
    }
    return diffs;
}

std::size_t closest_variant(const std::vector<VariantDiff>& diffs) {
    std::size_t best = diffs.size();
    for (std::size_t i = 0; i < diffs.size(); ++i) {
        if (!diffs[i].variant.feasible) continue;
        if (best == diffs.size() || diffs[i].l1_distance < diffs[best].l1_distance) best = i;
    }
    if (best == diffs.size()) {
        throw PreconditionError("no feasible windowing variant for this sequence");
    }
    return best;
}

void write_variant_diff_tsv(std::ostream& out, const RunConfig& config,
                            const std::vector<VariantDiff>& diffs, const FrequencyTable& reference) {
    write_report_header(out, config.echo(), {});
    const std::size_t best = closest_variant(diffs);
    out << "# closest_variant: " << diffs[best].variant.name << " l1=" << diffs[best].l1_distance
        << (diffs[best].exact ? " (exact)" : "") << '\n';
    out << "variant\tclass\tcount\treference\tdelta\n";
    for (const auto& diff : diffs) {
        if (!diff.variant.feasible) {
            out << diff.variant.name << "\t(infeasible)\t-\t-\t-\n";
            continue;
        }
        out << diff.variant.name << "\t(total-l1)\t-\t-\t" << diff.l1_distance << '\n';
        std::map<std::string, std::pair<uint64_t, uint64_t>> keys;
        for (const auto& [key, count] : diff.tally.entries()) keys[key].first = count;
        for (const auto& [key, ref] : reference.entries()) keys[key].second = ref;
        for (const auto& [key, counts] : keys) {
            const auto [observed, ref] = counts;
            if (observed == ref) continue;
            out << diff.variant.name << '\t' << key << '\t' << observed << '\t' << ref << '\t'
                << (observed >= ref ? static_cast<int64_t>(observed - ref)
                                    : -static_cast<int64_t>(ref - observed))
                << '\n';
        }
    }
}

void cmd_tables(const RunConfig& config) {
    std::vector<InputRecord> inputs;
    FrequencyTable class_table;
    GenomeSequence sequence;
    bool have_sequence = false;

    if (!config.class_fixture.empty()) {
        if (config.class_fixture != "fig1a") {
            throw ValidationError("unknown class fixture: '" + config.class_fixture + "' (available: fig1a)");
        }
        class_table = fig1a_class_counts();
        inputs.push_back({"class-fixture", "fixture:fig1a", table_digest(class_table)});
    } else {
        FastaLoad load = load_genome(config);
        sequence = std::move(load.sequence);
        have_sequence = true;
        inputs.push_back({"genome", config.genome_path, file_digest(config.genome_path)});
        const auto extraction = extract_windows(sequence, config.anchor, config.count, config.direction,
                                                config.window_size, policy_of(config));
        if (extraction.dropped > 0) {
            std::cerr << "warning: dropped " << extraction.dropped
                      << " windows containing ambiguity codes\n";
        }
        class_table = tally_classes(extraction.windows);
    }

    TableSource letters = load_letter_source(config);
    inputs.push_back(letters.record);

    {
        auto out = open_output(config.out_dir, "classes.tsv");
        write_report_header(out, config.echo(), inputs);
        write_class_rows(out, class_table);
    }
    {
        auto out = open_output(config.out_dir, "letters.tsv");
        write_report_header(out, config.echo(), inputs);
        write_letter_rows(out, letters.table);
    }
    if (config.variant_diff) {
        if (!have_sequence) {
            throw ValidationError("--variant-diff needs --genome");
        }
        auto out = open_output(config.out_dir, "variants.tsv");
        const auto diffs = run_variant_diff(sequence, config, fig1a_class_counts());
        write_variant_diff_tsv(out, config, diffs, fig1a_class_counts());
    }

    // Built last: a cardinality mismatch must not suppress the tallies.
    const SubstitutionTable mapping = build_mapping(class_table, letters.table);
    auto out = open_output(config.out_dir, "mapping.tsv");
    write_report_header(out, config.echo(), inputs);
    write_mapping_tsv(out, mapping);
}

void cmd_decode(const RunConfig& config, std::ostream& stdout_stream) {
    const Pipeline pipeline = build_pipeline(config);
    if (config.out_dir.empty()) {
        stdout_stream << pipeline.decoded << '\n';
        return;
    }
    auto out = open_output(config.out_dir, "decoded.txt");
    out << pipeline.decoded << '\n';
}

void cmd_search(const RunConfig& config) {
    if (config.dict_path.empty()) {
        throw ValidationError("search requires --dict");
    }
    require_file(config.dict_path, "dictionary");

    std::vector<InputRecord> inputs;
    std::string text;
    if (!config.text_path.empty()) {
        require_file(config.text_path, "text");
        text = read_file(config.text_path, "decoded text");
        while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
        inputs.push_back({"text", config.text_path, file_digest(config.text_path)});
    } else {
        Pipeline pipeline = build_pipeline(config);
        text = std::move(pipeline.decoded);
        inputs = std::move(pipeline.inputs);
    }
    inputs.push_back({"dictionary", config.dict_path, file_digest(config.dict_path)});

    const Dictionary dict = load_dictionary_file(config.dict_path, config.min_len);
    const auto exact = scan_exact(text, dict);
    std::vector<WordMatch> reconstructed;
    if (config.budget >= 1) {
        reconstructed = scan_reconstruction(text, dict, config.budget, config.budget,
                                            std::max<uint32_t>(3, config.min_len));
    }
    const auto phrases = assemble_phrases(exact, config.max_gap);

    {
        auto out = open_output(config.out_dir, "matches.tsv");
        write_report_header(out, config.echo(), inputs);
        out << "offset\tsurface\tword\tcost\tops\n";
        for (const auto& m : exact) {
            out << m.start << '\t' << m.surface << '\t' << m.word << "\t0\t-\n";
        }
        for (const auto& m : reconstructed) {
            out << m.start << '\t' << m.surface << '\t' << m.word << '\t' << m.cost << '\t'
                << format_ops(m.ops) << '\n';
        }
    }
    {
        auto out = open_output(config.out_dir, "phrases.tsv");
        write_report_header(out, config.echo(), inputs);
        out << "start\tend\tgap\tmembers\n";
        for (const auto& phrase : phrases) {
            out << phrase.span_start << '\t' << phrase.span_end << '\t' << phrase.gap << '\t';
            for (std::size_t i = 0; i < phrase.members.size(); ++i) {
                if (i) out << '+';
                out << phrase.members[i].word << '@' << phrase.members[i].start;
            }
            out << '\n';
        }
    }
    {
        auto out = open_output(config.out_dir, "search_summary.tsv");
        write_report_header(out, config.echo(), inputs);
        out << "length\texact_count\treconstruction_count\n";
        for (const auto& row : summarize_by_length(exact, reconstructed)) {
            out << row.length << '\t' << row.exact_count << '\t' << row.reconstruction_count << '\n';
        }
    }
}

void cmd_simulate(const RunConfig& config) {
    if (config.dict_path.empty()) {
        throw ValidationError("simulate requires --dict");
    }
    require_file(config.dict_path, "dictionary");

    const Pipeline pipeline = build_pipeline(config);
    const Dictionary dict = load_dictionary_file(config.dict_path, config.min_len);
    const NullModel model = parse_null_model(config.model);
    const NullModelResult result = run_null_model(pipeline.class_stream, pipeline.mapping, dict, model,
                                                  config.trials, config.seed, config.threads);

    nlohmann::ordered_json doc;
    doc["tool"] = "helixcipher";
    doc["version"] = kVersion;
    doc["config"] = config.echo();
    doc["config_hash"] = fnv1a64_hex(config.echo());
    doc["inputs"] = nlohmann::ordered_json::array();
    for (const auto& record : pipeline.inputs) {
        doc["inputs"].push_back(
            {{"label", record.label}, {"source", record.source}, {"digest", record.digest}});
    }
    doc["inputs"].push_back({{"label", "dictionary"},
                             {"source", config.dict_path},
                             {"digest", file_digest(config.dict_path)}});
    doc["model"] = to_string(result.model);
    doc["rng"] = result.rng_algorithm;
    doc["seed"] = result.seed;
    doc["trials"] = result.trials;
    doc["text_length"] = result.text_length;
    doc["length_classes"] = nlohmann::ordered_json::array();
    for (const auto& cls : result.classes) {
        double mean = 0.0;
        for (uint64_t c : cls.null_counts) mean += static_cast<double>(c);
        mean /= static_cast<double>(cls.null_counts.size());
        doc["length_classes"].push_back({{"label", cls.label},
                                         {"observed", cls.observed},
                                         {"p_value", cls.p_value},
                                         {"null_mean", mean},
                                         {"null_counts", cls.null_counts}});
    }

    auto out = open_output(config.out_dir, "simulate.json");
    out << doc.dump(2) << '\n';
}

void cmd_enumerate(const RunConfig& config, std::ostream& stdout_stream) {
    const auto classes = enumerate_classes(config.window_size, config.max_count);
    const auto& reference = reference_by_key();

    std::ofstream file;
    std::ostream* out = &stdout_stream;
    if (!config.out_dir.empty()) {
        file = open_output(config.out_dir, "enumerate.tsv");
        out = &file;
    }
    write_report_header(*out, config.echo(), {});
    *out << "class\tpermutations\treported_permutations\tdiff\n";
    for (const auto& cls : classes) {
        const uint32_t computed = permutation_count(cls);
        const auto it = reference.find(cls.key());
        *out << cls.key() << '\t' << computed << '\t';
        if (it != reference.end()) {
            *out << it->second->reported_permutations << '\t'
                 << (it->second->reported_permutations == computed ? "" : "*");
        } else {
            *out << "-\t";
        }
        *out << '\n';
    }
}

int run_cli(int argc, const char* const* argv) {
    RunConfig config;
    std::string direction = "backward";

    CLI::App app{"DNA helix-turn composition cipher toolkit"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    const auto add_windowing = [&](CLI::App* cmd) {
        cmd->add_option("--genome", config.genome_path, "Genome FASTA (or raw base) file");
        cmd->add_option("--anchor", config.anchor, "1-based anchor coordinate")->capture_default_str();
        cmd->add_option("--count", config.count, "Number of turn windows")->capture_default_str();
        cmd->add_option("--direction", direction, "Walk direction")
            ->check(CLI::IsMember({"forward", "backward"}))
            ->capture_default_str();
        cmd->add_option("--window-size", config.window_size, "Bases per turn window")
            ->capture_default_str();
        cmd->add_flag("--skip-ambiguous", config.skip_ambiguous,
                      "Drop windows containing IUPAC ambiguity codes instead of failing");
    };
    const auto add_letters = [&](CLI::App* cmd) {
        cmd->add_option("--corpus", config.corpus_path, "Reference corpus (plain text file)");
        cmd->add_option("--letter-fixture", config.letter_fixture, "Bundled letter table name")
            ->capture_default_str();
        cmd->add_option("--omit", config.omit, "Letters omitted from tallies")->capture_default_str();
    };
    const auto add_mapping = [&](CLI::App* cmd) {
        cmd->add_option("--mapping", config.mapping,
                        "Substitution table: TSV path or 'fig2' (default: built from tallies)");
    };
    const auto add_out = [&](CLI::App* cmd) {
        cmd->add_option("--out", config.out_dir, "Output directory");
    };

    CLI::App* tables = app.add_subcommand("tables", "Emit class, letter and substitution tables");
    add_windowing(tables);
    add_letters(tables);
    add_out(tables);
    tables->add_option("--class-fixture", config.class_fixture,
                       "Bundled class table name instead of a genome tally");
    tables->add_flag("--variant-diff", config.variant_diff,
                     "Also diff all windowing variants against the fig1a reference counts");

    CLI::App* decode = app.add_subcommand("decode", "Decode the genome's class stream into letters");
    add_windowing(decode);
    add_letters(decode);
    add_mapping(decode);
    add_out(decode);

    CLI::App* search = app.add_subcommand("search", "Scan decoded text for dictionary words");
    add_windowing(search);
    add_letters(search);
    add_mapping(search);
    add_out(search);
    search->add_option("--dict", config.dict_path, "Word list, one word per line");
    search->add_option("--text", config.text_path, "Existing decoded text instead of a genome");
    search->add_option("--budget", config.budget, "Reconstruction edit budget (0: exact only)")
        ->capture_default_str();
    search->add_option("--max-gap", config.max_gap, "Largest inter-word gap inside a phrase")
        ->capture_default_str();
    search->add_option("--min-len", config.min_len, "Shortest dictionary word kept")
        ->capture_default_str();

    CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo null model for the word yield");
    add_windowing(simulate);
    add_letters(simulate);
    add_mapping(simulate);
    add_out(simulate);
    simulate->add_option("--dict", config.dict_path, "Word list, one word per line");
    simulate->add_option("--trials", config.trials, "Number of null trials")->capture_default_str();
    simulate->add_option("--seed", config.seed, "RNG seed")->capture_default_str();
    simulate->add_option("--model", config.model, "Null model")
        ->check(CLI::IsMember({"shuffle-stream", "resample-letters"}))
        ->capture_default_str();
    simulate->add_option("--threads", config.threads, "Worker threads")->capture_default_str();
    simulate->add_option("--min-len", config.min_len, "Shortest dictionary word kept")
        ->capture_default_str();

    CLI::App* enumerate = app.add_subcommand("enumerate", "Enumerate the composition class space");
    enumerate->add_option("--window-size", config.window_size, "Bases per turn window")
        ->capture_default_str();
    enumerate->add_option("--max-count", config.max_count, "Largest per-base count admitted")
        ->capture_default_str();
    add_out(enumerate);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    config.direction = parse_direction(direction);

    try {
        if (tables->parsed()) {
            config.subcommand = "tables";
            cmd_tables(config);
        } else if (decode->parsed()) {
            config.subcommand = "decode";
            cmd_decode(config, std::cout);
        } else if (search->parsed()) {
            config.subcommand = "search";
            cmd_search(config);
        } else if (simulate->parsed()) {
            config.subcommand = "simulate";
            cmd_simulate(config);
        } else if (enumerate->parsed()) {
            config.subcommand = "enumerate";
            cmd_enumerate(config, std::cout);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace helixcipher
