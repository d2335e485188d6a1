#include "cli/expected_tables.hpp"

#include <sstream>
#include <utility>

namespace tribracket::cli {

namespace {

using Group = std::pair<const char*, const char*>;

const std::vector<Group> kBeta1 = {
    {"4u^2", "0_1 3_1 5_1 5_2 6_1 6_2 7_1 7_3 7_4 8_3 8_4 8_9 8_12 8_15 8_17 8_18 8_19"},
    {"u^3+3u^2", "4_1 8_1 8_2 8_5 8_6 8_11 8_14"},
    {"u^4+3u^2", "6_3 7_2 7_5 7_7 8_7 8_8 8_10 8_13"},
    {"u^4+u^3+2u^2", "8_20"},
    {"2u^4+2u^2", "8_21"},
    {"3u^2+u", "7_6 8_16"},
    {"3u^4+2u^2+3u", "L7n1"},
    {"4u^4+4u", "L4a1 L6a1 L7a2"},
    {"4u^4+4u^2", "L2a1"},
    {"4u^4+4u^3", "L6a2 L6a3"},
    {"4u^4+3u^3+u^2", "L7a3 L7a4"},
    {"4u^4+u^3+3u^2", "L7a6"},
    {"5u^4+2u^2+u", "L7a1 L7a5 L7n2"},
    {"6u^4+2u^3", "L5a1"},
    {"3u^4+5u^3+3u^2+5u", "L7a7"},
    {"4u^3+12u^2", "L6a5 L6n1"},
    {"12u^3+4u", "L6a4"},
};

const std::vector<Group> kBeta2 = {
    {"4u^2", "0_1 3_1 5_1 5_2 6_1 6_2 7_1 7_3 7_4 8_3 8_4 8_9 8_12 8_15 8_17 8_18 8_19"},
    {"2u^3+2u^2", "4_1 8_1 8_2 8_5 8_6 8_11 8_14"},
    {"u^4+2u^2+u", "6_3 7_2 7_5 7_6 7_7 8_7 8_8 8_10 8_13 8_16"},
    {"u^4+2u^3+u", "8_20"},
    {"2u^4+2u", "8_21"},
    {"8u^4", "L4a1 L7a2"},
    {"2u^4+2u^3+2u^2+2u", "L7a5 L7a6 L7n2"},
    {"4u^4+4u", "L2a1 L6a1 L6a2 L6a3"},
    {"4u^4+2u^3+2u^2", "L5a1 L7a1 L7a3 L7a4"},
    {"16u^3", "L6a5 L6n1"},
    {"4u^4+4u^3+4yu^2+4u", "L7a7"},
    {"4u^4+8u^3+4u", "L6a4"},
    {"2u^4+6u", "L7n1"},
};

std::vector<ExpectedRow> expand(const std::vector<Group>& groups) {
    std::vector<ExpectedRow> rows;
    for (const auto& [cell, names] : groups) {
        std::string printed = cell, normalized;
        for (char ch : printed)
            if (ch != 'y') normalized += ch;
        std::string erratum;
        if (normalized != printed) erratum = "stray 'y' in printed cell " + printed + " read as " + normalized;
        std::istringstream in(names);
        for (std::string n; in >> n;) rows.push_back({n, printed, normalized, erratum});
    }
    return rows;
}

}  // namespace

std::vector<ExpectedRow> expected_table(const std::string& bracket) {
    if (bracket == "beta1") return expand(kBeta1);
    if (bracket == "beta2") return expand(kBeta2);
    return {};
}

}  // namespace tribracket::cli
