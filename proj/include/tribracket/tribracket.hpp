#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace tribracket {

using Nested3 = std::vector<std::vector<std::vector<int>>>;

// Ternary operation on {1..n} stored as a flat tensor; T(a,b,c) is the entry in
// matrix a, row b, column c.
class Tribracket {
public:
    Tribracket(int n, std::vector<int> flat);
    static Tribracket from_nested(const Nested3& tensor);

    int size() const { return n_; }
    const std::vector<int>& flat() const { return t_; }
    Nested3 nested() const;

    std::size_t index(int a, int b, int c) const {
        return (static_cast<std::size_t>(a - 1) * n_ + (b - 1)) * n_ + (c - 1);
    }
    int operator()(int a, int b, int c) const { return t_[index(a, b, c)]; }

    // Range-checked evaluation.
    int eval(int a, int b, int c) const;
    // Unique x with [x,b,c] = d; throws NotQuasigroup.
    int divide_left(int b, int c, int d) const;
    // Unique x with [a,x,c] = d.
    int divide_center(int a, int c, int d) const;
    // Unique x with [a,b,x] = d.
    int divide_right(int a, int b, int d) const;

    bool operator==(const Tribracket& o) const { return n_ == o.n_ && t_ == o.t_; }
    bool operator<(const Tribracket& o) const { return n_ != o.n_ ? n_ < o.n_ : t_ < o.t_; }

    // Matrix-list rendering, one matrix per line.
    std::string str() const;

private:
    void check_label(int x) const;

    int n_;
    std::vector<int> t_;
};

struct Violation {
    std::string axiom;
    std::array<int, 4> witness;
};

struct AxiomReport {
    bool valid = true;
    std::vector<Violation> violations;
};

// Checks the three division properties and both equalities of the
// Reidemeister III identity over X^4. max_violations = 0 keeps all of them.
AxiomReport verify_tribracket(const Tribracket& t, std::size_t max_violations = 32);

// Dehn tribracket [a,b,c] = b a^-1 c from a Cayley table on labels 1..n.
Tribracket make_dehn(const std::vector<std::vector<int>>& group_table);

// Alexander tribracket [a,b,c] = x b + y c - x y a over Z_m; residue r has label r+1.
Tribracket make_alexander(std::int64_t m, std::int64_t x, std::int64_t y);

struct EnumerationOptions {
    int bound = 3;
    unsigned workers = 1;
};

// Every tribracket on {1..n}, in lexicographic order of the flat tensor.
// Throws BoundExceeded when n > bound + 1; n = bound + 1 logs a warning.
std::vector<Tribracket> enumerate_tribrackets(int n, const EnumerationOptions& opts = {});

}  // namespace tribracket
