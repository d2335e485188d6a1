#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tribracket/ring.hpp"
#include "tribracket/tribracket.hpp"

namespace tribracket {

// Unverified coefficient data: A and B are flat tensors indexed like the tribracket.
struct BracketSpec {
    Tribracket X;
    std::int64_t modulus;
    std::vector<std::int64_t> A;
    std::vector<std::int64_t> B;

    bool operator==(const BracketSpec& o) const {
        return X == o.X && modulus == o.modulus && A == o.A && B == o.B;
    }
};

// corrected: the fourth skein equation with four right-hand terms.
// printed: the same equation with the term A A B counted twice.
enum class SkeinVariant { corrected, printed };

struct BracketAxiomReport {
    bool valid = true;
    bool units_ok = true;
    bool delta_ok = true;
    bool w_ok = true;
    std::optional<std::int64_t> delta;
    std::optional<std::int64_t> w;
    // Human-readable reasons for unit, delta and w failures.
    std::vector<std::string> notes;
    // axiom is one of "ii.i" .. "ii.v".
    std::vector<Violation> skein_violations;
};

class Bracket {
public:
    const Tribracket& tribracket() const { return spec_.X; }
    const ModulusRing& ring() const { return ring_; }
    const BracketSpec& spec() const { return spec_; }
    std::int64_t A(int a, int b, int c) const { return spec_.A[spec_.X.index(a, b, c)]; }
    std::int64_t B(int a, int b, int c) const { return spec_.B[spec_.X.index(a, b, c)]; }
    std::int64_t delta() const { return delta_; }
    std::int64_t w() const { return w_; }

    bool operator==(const Bracket& o) const { return spec_ == o.spec_; }

private:
    Bracket(BracketSpec spec, std::int64_t delta, std::int64_t w);
    friend Bracket make_bracket(BracketSpec spec, SkeinVariant variant);

    BracketSpec spec_;
    ModulusRing ring_;
    std::int64_t delta_;
    std::int64_t w_;
};

// Throws NonUnit naming the first entry of A or B that is not a unit.
void require_units(const BracketSpec& spec);

// Common value of -A B^-1 - A^-1 B; throws NotConstant with two witness triples.
std::int64_t derive_delta(const BracketSpec& spec);

// Common value of -A_{abb}^2 B_{abb}^-1, also checking -A_{abb}^-2 B_{abb} = w^-1.
std::int64_t derive_w(const BracketSpec& spec);

BracketAxiomReport verify_bracket(const BracketSpec& spec, SkeinVariant variant = SkeinVariant::corrected,
                                  std::size_t max_violations = 32);

// Verifies and freezes; throws NonUnit or InvalidBracket.
Bracket make_bracket(BracketSpec spec, SkeinVariant variant = SkeinVariant::corrected);

// One-element tribracket with A = a, B = a^-1.
Bracket make_kauffman(std::int64_t m, std::int64_t a);

struct CocycleResult {
    std::optional<Bracket> bracket;
    BracketAxiomReport report;
};

// A = B = phi, where phi is a flat tensor of units.
CocycleResult make_cocycle(const Tribracket& X, std::int64_t m, const std::vector<std::int64_t>& phi);

struct SearchOptions {
    // Zero means no limit.
    std::size_t limit = 0;
    unsigned workers = 1;
    // Largest tribracket size searched without a warning; one more is allowed.
    int bound = 2;
    // false selects the unpruned oracle: every unit assignment is fully verified.
    bool prune = true;
};

// All brackets on X over Z_m, sorted by the concatenated (A, B) flat tensors.
std::vector<Bracket> search_brackets(const Tribracket& X, std::int64_t m, const SearchOptions& opts = {});

// Lexicographic order on (A, B).
bool bracket_less(const Bracket& x, const Bracket& y);

}  // namespace tribracket
