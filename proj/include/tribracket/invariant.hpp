#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "tribracket/bracket.hpp"
#include "tribracket/diagram.hpp"
#include "tribracket/tribracket.hpp"

namespace tribracket {

// Face index -> element of {1..n}.
using Coloring = std::vector<int>;

// Formal sum of u^e over residues e of Z_m, stored as exponent -> multiplicity.
class InvariantPolynomial {
public:
    explicit InvariantPolynomial(std::int64_t modulus);

    void add(std::int64_t exponent, std::uint64_t multiplicity = 1);
    void merge(const InvariantPolynomial& o);

    std::int64_t modulus() const { return modulus_; }
    const std::map<std::int64_t, std::uint64_t>& terms() const { return terms_; }
    std::uint64_t total() const;
    std::vector<std::int64_t> multiset() const;

    // Descending exponents, e.g. "4u^4+3u^3+u^2", "3u^2+u", "8u", "4".
    std::string str() const;
    nlohmann::json to_json() const;
    // Accepts terms in any order, such as "u+u^4+2u^2".
    static InvariantPolynomial parse(const std::string& text, std::int64_t modulus);

    bool operator==(const InvariantPolynomial& o) const {
        return modulus_ == o.modulus_ && terms_ == o.terms_;
    }
    bool operator!=(const InvariantPolynomial& o) const { return !(*this == o); }

private:
    std::int64_t modulus_;
    std::map<std::int64_t, std::uint64_t> terms_;
};

// All colorings with [a,b,c] = d at every crossing, in lexicographic order.
std::vector<Coloring> enumerate_colorings(const LinkDiagram& d, const Tribracket& X);
std::uint64_t counting_invariant(const LinkDiagram& d, const Tribracket& X);

// Smoothing data of a diagram, reusable across colorings and brackets.
class StateSum {
public:
    explicit StateSum(const LinkDiagram& d);

    // w^(n-p) times the sum over states of the coefficient product times delta^k.
    std::int64_t beta(const Bracket& br, const Coloring& col) const;

private:
    const LinkDiagram& d_;
    std::vector<int> loops_;
    int max_loops_ = 0;
};

std::int64_t beta(const LinkDiagram& d, const Bracket& br, const Coloring& col);
InvariantPolynomial phi(const LinkDiagram& d, const Bracket& br, unsigned workers = 1);
std::vector<std::int64_t> phi_multiset(const LinkDiagram& d, const Bracket& br);

}  // namespace tribracket
