#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace tribracket {

// Crossings are read counterclockwise from the incoming under-strand.
struct PDCode {
    std::vector<std::array<int, 4>> crossings;
    // Crossingless circles declared with U(k).
    int free_loops = 0;

    int edge_count() const { return 2 * static_cast<int>(crossings.size()); }
};

// Accepts "X(a,b,c,d) ...", "X[a,b,c,d], ..." (optionally wrapped in PD[...]),
// nested lists "[[a,b,c,d],...]" or "{{a,b,c,d},...}", and U(k) markers.
PDCode parse_pd(const std::string& text);
std::string pd_string(const PDCode& pd);

struct Corner {
    int crossing;
    // Region between this slot and the next one counterclockwise.
    int slot;
};

enum Role { kA = 0, kB = 1, kC = 2, kD = 3 };

struct LinkDiagram {
    PDCode pd;
    int components = 0;
    // Slot 4x+s is joined by an edge to slot partner[4x+s].
    std::vector<int> partner;
    // Component of each crossing slot, components ordered by smallest edge label,
    // crossingless circles last.
    std::vector<std::array<int, 4>> slot_component;
    std::vector<int> under_in;
    std::vector<int> over_in;
    std::vector<int> signs;
    int positive = 0;
    int negative = 0;
    // Faces are corner orbits; the inner disc of a crossingless circle has no corners.
    std::vector<std::vector<Corner>> faces;
    std::vector<std::array<int, 4>> corner_face;
    // Face index of roles a, b, c, d at each crossing: a lies left of both strands, d right of both,
    // b left of the under-strand and right of the over-strand, c the reverse.
    std::vector<std::array<int, 4>> roles;

    int crossings() const { return static_cast<int>(pd.crossings.size()); }
    int writhe() const { return positive - negative; }
};

// Bit i of flip_mask reverses component i.
LinkDiagram build_diagram(const PDCode& pd, std::uint64_t flip_mask = 0);

struct SmoothingState {
    // Bit j set: disoriented smoothing at crossing j.
    std::uint64_t choices;
    int loops;
};

constexpr int kMaxStateCrossings = 24;

int smooth(const LinkDiagram& d, std::uint64_t choices);
// All 2^c states in binary-counter order; throws BoundExceeded beyond 24 crossings.
std::vector<SmoothingState> enumerate_states(const LinkDiagram& d);

// Mirror image: swaps over and under at every crossing.
PDCode mirror(const PDCode& pd);

}  // namespace tribracket
