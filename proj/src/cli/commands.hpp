#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "tribracket/bracket.hpp"
#include "tribracket/catalog.hpp"
#include "tribracket/invariant.hpp"

namespace tribracket::cli {

enum ExitCode { kOk = 0, kInternal = 1, kInput = 2, kResource = 3, kCheckFailed = 4 };

struct OrientedPhi {
    std::uint64_t mask;
    std::uint64_t colorings;
    InvariantPolynomial phi;
};

// Phi under every orientation mask of the entry's components.
std::vector<OrientedPhi> phi_all_orientations(const PDCode& pd, int components, const Bracket& br);

struct TableRow {
    std::string name;
    int crossings = 0;
    int components = 0;
    std::uint64_t coloring_count = 0;
    std::string phi;
    std::uint64_t orientation_mask = 0;
    // "match", "mismatch" or "unlisted".
    std::string match;
    std::string expected;
    std::string erratum;
    std::vector<OrientedPhi> by_orientation;
};

// corpus: knots8, links7, composite, or all.
std::vector<TableRow> compute_table(const Bracket& br, const std::string& bracket_name, const std::string& corpus,
                                    unsigned workers);

std::string table_csv(const std::vector<TableRow>& rows);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tribracket::cli
