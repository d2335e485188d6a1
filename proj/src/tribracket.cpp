#include "tribracket/tribracket.hpp"

#include <algorithm>
#include <atomic>
#include <iostream>
#include <sstream>
#include <thread>

#include "tribracket/errors.hpp"
#include "tribracket/ring.hpp"

namespace tribracket {

Tribracket::Tribracket(int n, std::vector<int> flat) : n_(n), t_(std::move(flat)) {
    if (n < 1) throw ParseError("tribracket size must be positive");
    if (t_.size() != static_cast<std::size_t>(n) * n * n)
        throw ParseError("tensor has " + std::to_string(t_.size()) + " entries, expected " +
                         std::to_string(n * n * n));
    for (int v : t_)
        if (v < 1 || v > n)
            throw ParseError("tensor entry " + std::to_string(v) + " outside 1.." + std::to_string(n));
}

Tribracket Tribracket::from_nested(const Nested3& tensor) {
    int n = static_cast<int>(tensor.size());
    std::vector<int> flat;
    for (const auto& m : tensor) {
        if (static_cast<int>(m.size()) != n) throw ParseError("tensor is not n x n x n");
        for (const auto& row : m) {
            if (static_cast<int>(row.size()) != n) throw ParseError("tensor is not n x n x n");
            flat.insert(flat.end(), row.begin(), row.end());
        }
    }
    return Tribracket(n, std::move(flat));
}

Nested3 Tribracket::nested() const {
    Nested3 out(n_, std::vector<std::vector<int>>(n_, std::vector<int>(n_)));
    for (int a = 1; a <= n_; ++a)
        for (int b = 1; b <= n_; ++b)
            for (int c = 1; c <= n_; ++c) out[a - 1][b - 1][c - 1] = (*this)(a, b, c);
    return out;
}

void Tribracket::check_label(int x) const {
    if (x < 1 || x > n_)
        throw std::out_of_range("element " + std::to_string(x) + " outside 1.." + std::to_string(n_));
}

int Tribracket::eval(int a, int b, int c) const {
    check_label(a);
    check_label(b);
    check_label(c);
    return (*this)(a, b, c);
}

namespace {

template <class F>
int unique_solution(int n, F&& f, const char* what) {
    int found = 0;
    for (int x = 1; x <= n; ++x) {
        if (!f(x)) continue;
        if (found) throw NotQuasigroup(std::string(what) + " division has several solutions");
        found = x;
    }
    if (!found) throw NotQuasigroup(std::string(what) + " division has no solution");
    return found;
}

}  // namespace

int Tribracket::divide_left(int b, int c, int d) const {
    check_label(b);
    check_label(c);
    check_label(d);
    return unique_solution(n_, [&](int x) { return (*this)(x, b, c) == d; }, "left");
}

int Tribracket::divide_center(int a, int c, int d) const {
    check_label(a);
    check_label(c);
    check_label(d);
    return unique_solution(n_, [&](int x) { return (*this)(a, x, c) == d; }, "center");
}

int Tribracket::divide_right(int a, int b, int d) const {
    check_label(a);
    check_label(b);
    check_label(d);
    return unique_solution(n_, [&](int x) { return (*this)(a, b, x) == d; }, "right");
}

std::string Tribracket::str() const {
    std::ostringstream os;
    for (int a = 1; a <= n_; ++a) {
        os << '[';
        for (int b = 1; b <= n_; ++b) {
            os << (b > 1 ? " [" : "[");
            for (int c = 1; c <= n_; ++c) os << (c > 1 ? " " : "") << (*this)(a, b, c);
            os << ']';
        }
        os << "]\n";
    }
    return os.str();
}

AxiomReport verify_tribracket(const Tribracket& t, std::size_t max_violations) {
    AxiomReport rep;
    int n = t.size();
    auto add = [&](const char* axiom, std::array<int, 4> w) {
        rep.valid = false;
        if (max_violations == 0 || rep.violations.size() < max_violations)
            rep.violations.push_back({axiom, w});
    };
    // For each line through the tensor, count how often each value d appears.
    for (int p = 1; p <= n; ++p)
        for (int q = 1; q <= n; ++q)
            for (int d = 1; d <= n; ++d) {
                int left = 0, center = 0, right = 0;
                for (int x = 1; x <= n; ++x) {
                    left += t(x, p, q) == d;
                    center += t(p, x, q) == d;
                    right += t(p, q, x) == d;
                }
                if (left != 1) add("i.left", {0, p, q, d});
                if (center != 1) add("i.center", {p, 0, q, d});
                if (right != 1) add("i.right", {p, q, 0, d});
            }
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            for (int c = 1; c <= n; ++c)
                for (int d = 1; d <= n; ++d) {
                    int abc = t(a, b, c), acd = t(a, c, d), abd = t(a, b, d);
                    int lhs = t(c, abc, acd);
                    int mid = t(b, abc, abd);
                    int rhs = t(d, abd, acd);
                    if (lhs != mid) add("ii.1", {a, b, c, d});
                    if (mid != rhs) add("ii.2", {a, b, c, d});
                }
    return rep;
}

Tribracket make_dehn(const std::vector<std::vector<int>>& g) {
    int n = static_cast<int>(g.size());
    if (n < 1) throw NotAGroup("empty Cayley table");
    for (const auto& row : g) {
        if (static_cast<int>(row.size()) != n) throw NotAGroup("Cayley table is not square");
        for (int v : row)
            if (v < 1 || v > n) throw NotAGroup("Cayley table entry out of range");
    }
    auto op = [&](int x, int y) { return g[x - 1][y - 1]; };
    int e = 0;
    for (int x = 1; x <= n && !e; ++x) {
        bool ok = true;
        for (int y = 1; y <= n && ok; ++y) ok = op(x, y) == y && op(y, x) == y;
        if (ok) e = x;
    }
    if (!e) throw NotAGroup("no identity element");
    std::vector<int> inverse(n + 1, 0);
    for (int x = 1; x <= n; ++x) {
        for (int y = 1; y <= n; ++y)
            if (op(x, y) == e && op(y, x) == e) inverse[x] = y;
        if (!inverse[x]) throw NotAGroup("element " + std::to_string(x) + " has no inverse");
    }
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y)
            for (int z = 1; z <= n; ++z)
                if (op(op(x, y), z) != op(x, op(y, z)))
                    throw NotAGroup("not associative at (" + std::to_string(x) + "," + std::to_string(y) +
                                    "," + std::to_string(z) + ")");
    std::vector<int> flat;
    flat.reserve(static_cast<std::size_t>(n) * n * n);
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            for (int c = 1; c <= n; ++c) flat.push_back(op(op(b, inverse[a]), c));
    return Tribracket(n, std::move(flat));
}

Tribracket make_alexander(std::int64_t m, std::int64_t x, std::int64_t y) {
    ModulusRing r(m);
    if (!r.is_unit(x)) throw NonUnit("x = " + std::to_string(x) + " is not a unit modulo " + std::to_string(m));
    if (!r.is_unit(y)) throw NonUnit("y = " + std::to_string(y) + " is not a unit modulo " + std::to_string(m));
    int n = static_cast<int>(m);
    std::int64_t xy = r.mul(x, y);
    std::vector<int> flat;
    flat.reserve(static_cast<std::size_t>(n) * n * n);
    for (std::int64_t a = 0; a < m; ++a)
        for (std::int64_t b = 0; b < m; ++b)
            for (std::int64_t c = 0; c < m; ++c)
                flat.push_back(static_cast<int>(r.sub(r.add(r.mul(x, b), r.mul(y, c)), r.mul(xy, a)) + 1));
    return Tribracket(n, std::move(flat));
}

namespace {

class Enumerator {
public:
    explicit Enumerator(int n) : n_(n), cells_(n * n * n) {}

    // Fills cells from position pos onwards, starting from the partial tensor t.
    void run(std::vector<int>& t, int pos, std::vector<std::vector<int>>& out) const {
        if (pos == cells_) {
            out.push_back(t);
            return;
        }
        int a = pos / (n_ * n_) + 1, b = (pos / n_) % n_ + 1, c = pos % n_ + 1;
        for (int v = 1; v <= n_; ++v) {
            if (!line_ok(t, a, b, c, v)) continue;
            t[pos] = v;
            if (c < n_ || identity_ok(t)) run(t, pos + 1, out);
            t[pos] = 0;
        }
    }

    bool line_ok(const std::vector<int>& t, int a, int b, int c, int v) const {
        for (int x = 1; x <= n_; ++x) {
            if (x != a && at(t, x, b, c) == v) return false;
            if (x != b && at(t, a, x, c) == v) return false;
            if (x != c && at(t, a, b, x) == v) return false;
        }
        return true;
    }

    // Checks every quadruple whose six needed entries are already filled.
    bool identity_ok(const std::vector<int>& t) const {
        for (int a = 1; a <= n_; ++a)
            for (int b = 1; b <= n_; ++b)
                for (int c = 1; c <= n_; ++c) {
                    int abc = at(t, a, b, c);
                    if (!abc) continue;
                    for (int d = 1; d <= n_; ++d) {
                        int acd = at(t, a, c, d), abd = at(t, a, b, d);
                        if (!acd || !abd) continue;
                        int x = at(t, c, abc, acd), y = at(t, b, abc, abd), z = at(t, d, abd, acd);
                        if ((x && y && x != y) || (y && z && y != z) || (x && z && x != z)) return false;
                    }
                }
        return true;
    }

    int cells() const { return cells_; }

private:
    int at(const std::vector<int>& t, int a, int b, int c) const {
        return t[(static_cast<std::size_t>(a - 1) * n_ + (b - 1)) * n_ + (c - 1)];
    }

    int n_;
    int cells_;
};

}  // namespace

std::vector<Tribracket> enumerate_tribrackets(int n, const EnumerationOptions& opts) {
    if (n < 1) throw ParseError("size must be positive");
    if (n > opts.bound + 1)
        throw BoundExceeded("enumeration of size " + std::to_string(n) + " exceeds the bound " +
                            std::to_string(opts.bound));
    if (n > opts.bound) std::cerr << "warning: enumerating tribrackets of size " << n << " may take a while\n";

    Enumerator e(n);
    // Split on the first row (entries [1,1,c]), which is a permutation.
    std::vector<std::vector<int>> prefixes;
    {
        std::vector<int> t(e.cells(), 0);
        std::vector<int> row(n);
        for (int i = 0; i < n; ++i) row[i] = i + 1;
        do {
            prefixes.push_back(row);
        } while (std::next_permutation(row.begin(), row.end()));
    }
    std::vector<std::vector<std::vector<int>>> parts(prefixes.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < prefixes.size();) {
            std::vector<int> t(e.cells(), 0);
            std::copy(prefixes[i].begin(), prefixes[i].end(), t.begin());
            if (n > 1 && !e.identity_ok(t)) continue;
            e.run(t, n, parts[i]);
        }
    };
    unsigned w = std::max(1u, opts.workers);
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < w; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    std::vector<Tribracket> out;
    for (auto& part : parts)
        for (auto& flat : part) {
            Tribracket t(n, std::move(flat));
            if (verify_tribracket(t, 1).valid) out.push_back(std::move(t));
        }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace tribracket
