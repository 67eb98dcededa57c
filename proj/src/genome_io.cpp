#include "helixcipher/genome_io.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>

#include "helixcipher/errors.hpp"

namespace helixcipher {

namespace {

constexpr std::array<bool, 256> make_lookup(const char* symbols) {
    std::array<bool, 256> table{};
    for (const char* p = symbols; *p; ++p) {
        table[static_cast<unsigned char>(*p)] = true;
    }
    return table;
}

constexpr auto kIsCanonical = make_lookup("ACGT");
// IUPAC nucleotide ambiguity codes, accepted only under kSkipWindows.
constexpr auto kIsAmbiguity = make_lookup("RYSWKMBDHVN");

char fold_upper(char c) {
    return (c >= 'a' && c <= 'z') ? static_cast<char>(c - ('a' - 'A')) : c;
}

std::string first_token(const std::string& line) {
    std::size_t begin = 0;
    while (begin < line.size() && std::isspace(static_cast<unsigned char>(line[begin]))) ++begin;
    std::size_t end = begin;
    while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) ++end;
    return line.substr(begin, end - begin);
}

void append_bases(std::string& out, const std::string& line, AmbiguityPolicy policy) {
    for (char raw : line) {
        if (std::isspace(static_cast<unsigned char>(raw))) continue;
        const char c = fold_upper(raw);
        const auto uc = static_cast<unsigned char>(c);
        if (kIsCanonical[uc] || (policy == AmbiguityPolicy::kSkipWindows && kIsAmbiguity[uc])) {
            out.push_back(c);
            continue;
        }
        throw ValidationError("invalid symbol '" + std::string(1, raw) + "' at sequence position " +
                              std::to_string(out.size() + 1));
    }
}

bool window_is_canonical(const std::string& bases, uint64_t start, uint32_t size) {
    for (uint64_t i = start - 1; i < start - 1 + size; ++i) {
        if (!kIsCanonical[static_cast<unsigned char>(bases[i])]) return false;
    }
    return true;
}

}  // namespace

FastaLoad load_fasta(std::istream& source, AmbiguityPolicy policy) {
    FastaLoad result;
    std::string line;
    bool in_first_record = false;
    bool saw_header = false;

    while (std::getline(source, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '>') {
            if (!saw_header && !result.sequence.bases.empty()) {
                throw ValidationError("sequence data precedes the first FASTA header");
            }
            if (saw_header) {
                result.skipped_records.push_back(first_token(line.substr(1)));
                in_first_record = false;
                continue;
            }
            saw_header = true;
            in_first_record = true;
            result.sequence.id = first_token(line.substr(1));
            continue;
        }
        if (saw_header && !in_first_record) continue;  // body of a skipped record
        append_bases(result.sequence.bases, line, policy);
    }

    if (result.sequence.bases.empty()) {
        throw ValidationError(saw_header ? "FASTA record contains no bases" : "empty input");
    }
    return result;
}

FastaLoad load_fasta(const std::string& content, AmbiguityPolicy policy) {
    std::istringstream stream(content);
    return load_fasta(stream, policy);
}

FastaLoad load_fasta_file(const std::string& path, AmbiguityPolicy policy) {
    std::ifstream stream(path, std::ios::binary);
    if (!stream) {
        throw IoError("cannot open sequence file: " + path);
    }
    return load_fasta(stream, policy);
}

std::string to_fasta(const GenomeSequence& seq, std::size_t line_width) {
    if (line_width == 0) line_width = 70;
    std::string out;
    if (!seq.id.empty()) {
        out.reserve(seq.bases.size() + seq.bases.size() / line_width + seq.id.size() + 3);
        out.push_back('>');
        out.append(seq.id);
        out.push_back('\n');
    }
    for (std::size_t pos = 0; pos < seq.bases.size(); pos += line_width) {
        out.append(seq.bases, pos, std::min(line_width, seq.bases.size() - pos));
        out.push_back('\n');
    }
    return out;
}

WindowExtraction extract_windows(const GenomeSequence& seq, uint64_t anchor, uint64_t count,
                                 Direction direction, uint32_t size, AmbiguityPolicy policy) {
    WindowExtraction result;
    if (size == 0) {
        throw PreconditionError("window size must be at least 1");
    }
    if (count == 0) {
        return result;
    }
    const uint64_t length = seq.length();
    if (anchor < 1 || anchor > length) {
        throw PreconditionError("anchor " + std::to_string(anchor) + " outside sequence of length " +
                                std::to_string(length));
    }
    if (count > UINT64_MAX / size) {
        throw PreconditionError("window request overflows: count " + std::to_string(count) +
                                " of size " + std::to_string(size));
    }
    const uint64_t need = count * size;
    const bool backward = direction == Direction::kBackward;
    if (backward ? anchor < need : need - 1 > length - anchor) {
        throw PreconditionError("insufficient bases for " + std::to_string(count) + " windows of size " +
                                std::to_string(size) + (backward ? " backward" : " forward") +
                                " from anchor " + std::to_string(anchor));
    }

    result.windows.reserve(count);
    for (uint64_t i = 0; i < count; ++i) {
        const uint64_t start = backward ? anchor - (i + 1) * size + 1 : anchor + i * size;
        if (policy == AmbiguityPolicy::kSkipWindows && !window_is_canonical(seq.bases, start, size)) {
            ++result.dropped;
            continue;
        }
        result.windows.push_back(TurnWindow{start, seq.bases.substr(start - 1, size)});
    }
    return result;
}

}  // namespace helixcipher
