#include "helixcipher/fixtures.hpp"

#include "helixcipher/errors.hpp"

namespace helixcipher {

const std::vector<ClassReferenceRow>& fig1a_reference() {
    static const std::vector<ClassReferenceRow> rows = {
        {"0055", 5, 6, "0.0016"},    {"0028", 7, 12, "0.0022"},   {"0118", 11, 12, "0.0035"},
        {"1117", 15, 4, "0.0047"},   {"0037", 16, 12, "0.0050"},  {"0046", 23, 12, "0.0072"},
        {"0226", 63, 12, "0.0198"},  {"0127", 76, 16, "0.0239"},  {"0136", 109, 16, "0.0343"},
        {"1144", 119, 6, "0.0374"},  {"0244", 135, 12, "0.0424"}, {"0145", 140, 16, "0.0440"},
        {"1126", 144, 12, "0.0453"}, {"0334", 145, 12, "0.0456"}, {"1333", 181, 4, "0.0569"},
        {"2224", 188, 4, "0.0591"},  {"1135", 195, 12, "0.0613"}, {"0235", 225, 16, "0.0707"},
        {"1225", 290, 12, "0.0911"}, {"2233", 295, 6, "0.0927"},  {"1234", 800, 16, "0.2514"},
    };
    return rows;
}

const std::vector<LetterReferenceRow>& fig1b_reference() {
    static const std::vector<LetterReferenceRow> rows = {
        {'J', 5, "0.0016"},   {'K', 26, "0.0082"},  {'P', 52, "0.0163"},  {'F', 53, "0.0167"},
        {'G', 69, "0.0217"},  {'Y', 70, "0.0220"},  {'B', 83, "0.0261"},  {'W', 86, "0.0270"},
        {'M', 91, "0.0286"},  {'U', 92, "0.0289"},  {'L', 131, "0.0412"}, {'D', 149, "0.0468"},
        {'R', 183, "0.0575"}, {'O', 219, "0.0688"}, {'S', 221, "0.0694"}, {'N', 235, "0.0738"},
        {'T', 239, "0.0751"}, {'H', 253, "0.0795"}, {'I', 253, "0.0795"}, {'A', 291, "0.0914"},
        {'E', 382, "0.1200"},
    };
    return rows;
}

const std::vector<std::pair<std::string, char>>& fig2_reference_pairs() {
    static const std::vector<std::pair<std::string, char>> pairs = {
        {"0055", 'J'}, {"0028", 'K'}, {"0118", 'P'}, {"1117", 'F'}, {"0037", 'G'}, {"0046", 'Y'},
        {"0226", 'B'}, {"0127", 'W'}, {"0136", 'M'}, {"1144", 'U'}, {"0244", 'L'}, {"0145", 'D'},
        {"1126", 'R'}, {"0334", 'O'}, {"1333", 'S'}, {"2224", 'N'}, {"1135", 'T'}, {"0235", 'H'},
        {"1225", 'I'}, {"2233", 'A'}, {"1234", 'E'},
    };
    return pairs;
}

FrequencyTable fig1a_class_counts() {
    FrequencyTable table;
    for (const auto& row : fig1a_reference()) table.add(row.key, row.frequency);
    return table;
}

FrequencyTable fig1b_letter_counts() {
    FrequencyTable table;
    for (const auto& row : fig1b_reference()) table.add(std::string(1, row.letter), row.frequency);
    return table;
}

FrequencyTable fixture_table(const std::string& name) {
    if (name == "fig1a") return fig1a_class_counts();
    if (name == "fig1b") return fig1b_letter_counts();
    throw ValidationError("unknown fixture table: '" + name + "' (available: fig1a, fig1b)");
}

std::set<char> default_omitted_letters() { return {'C', 'Q', 'V', 'X', 'Z'}; }

}  // namespace helixcipher
