#pragma once

#include <string>
#include <vector>

namespace tribracket::cli {

struct ExpectedRow {
    std::string name;
    // Cell exactly as printed in the published table.
    std::string printed;
    // printed with typographical slips removed, ready for parsing.
    std::string normalized;
    // Non-empty when normalization changed the cell.
    std::string erratum;
};

// Rows for "beta1" or "beta2"; empty for any other bracket.
std::vector<ExpectedRow> expected_table(const std::string& bracket);

}  // namespace tribracket::cli
