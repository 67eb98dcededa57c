#include "helixcipher/report.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "helixcipher/errors.hpp"
#include "helixcipher/version.hpp"

namespace helixcipher {

uint64_t fnv1a64(std::string_view bytes) {
    uint64_t hash = 0xCBF29CE484222325ULL;
    for (char c : bytes) {
        hash ^= static_cast<unsigned char>(c);
        hash *= 0x100000001B3ULL;
    }
    return hash;
}

std::string fnv1a64_hex(std::string_view bytes) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "fnv1a64:%016llx",
                  static_cast<unsigned long long>(fnv1a64(bytes)));
    return buffer;
}

std::string file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read input for digest: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return fnv1a64_hex(buffer.str());
}

void write_report_header(std::ostream& out, const std::string& config_echo,
                         const std::vector<InputRecord>& inputs) {
    out << "# helixcipher " << kVersion << '\n';
    out << "# config: " << config_echo << '\n';
    out << "# config_hash: " << fnv1a64_hex(config_echo) << '\n';
    for (const auto& input : inputs) {
        out << "# input: " << input.label << '=' << input.source << ' ' << input.digest << '\n';
    }
}

}  // namespace helixcipher
