#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace helixcipher {

uint64_t fnv1a64(std::string_view bytes);
std::string fnv1a64_hex(std::string_view bytes);
/// Digest of a file's bytes, "fnv1a64:<16 hex digits>".
std::string file_digest(const std::string& path);

/// One input named in a report header.
struct InputRecord {
    std::string label;   ///< e.g. "genome", "corpus", "dictionary"
    std::string source;  ///< path or "fixture:fig1b"
    std::string digest;  ///< file or fixture digest
};

/// Comment header embedded in every report: tool version, the config
/// echoed verbatim, its hash, and one line per input, so any two
/// differing reports differ in a named input.
void write_report_header(std::ostream& out, const std::string& config_echo,
                         const std::vector<InputRecord>& inputs);

}  // namespace helixcipher
