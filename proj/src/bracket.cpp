#include "tribracket/bracket.hpp"

#include <algorithm>
#include <atomic>
#include <iostream>
#include <thread>

#include "skein.hpp"
#include "tribracket/errors.hpp"

namespace tribracket {

namespace {

std::string triple_str(int a, int b, int c) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

void check_shape(const BracketSpec& s) {
    std::size_t cells = s.X.flat().size();
    if (s.A.size() != cells || s.B.size() != cells)
        throw ParseError("coefficient tensors must have " + std::to_string(cells) + " entries");
}

BracketSpec reduced(BracketSpec s) {
    ModulusRing r(s.modulus);
    for (auto& v : s.A) v = r.reduce(v);
    for (auto& v : s.B) v = r.reduce(v);
    return s;
}

std::int64_t delta_of(const ModulusRing& r, std::int64_t a, std::int64_t b) {
    return r.neg(r.add(r.mul(a, r.inv(b)), r.mul(r.inv(a), b)));
}

std::int64_t w_of(const ModulusRing& r, std::int64_t a, std::int64_t b) {
    return r.neg(r.mul(r.mul(a, a), r.inv(b)));
}

}  // namespace

Bracket::Bracket(BracketSpec spec, std::int64_t delta, std::int64_t w)
    : spec_(std::move(spec)), ring_(spec_.modulus), delta_(delta), w_(w) {}

void require_units(const BracketSpec& spec) {
    check_shape(spec);
    ModulusRing r(spec.modulus);
    int n = spec.X.size();
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            for (int c = 1; c <= n; ++c) {
                std::size_t i = spec.X.index(a, b, c);
                if (!r.is_unit(spec.A[i]))
                    throw NonUnit("A" + triple_str(a, b, c) + " = " + std::to_string(r.reduce(spec.A[i])) +
                                  " is not a unit modulo " + std::to_string(spec.modulus));
                if (!r.is_unit(spec.B[i]))
                    throw NonUnit("B" + triple_str(a, b, c) + " = " + std::to_string(r.reduce(spec.B[i])) +
                                  " is not a unit modulo " + std::to_string(spec.modulus));
            }
}

std::int64_t derive_delta(const BracketSpec& spec) {
    require_units(spec);
    ModulusRing r(spec.modulus);
    int n = spec.X.size();
    std::int64_t first = delta_of(r, spec.A[0], spec.B[0]);
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            for (int c = 1; c <= n; ++c) {
                std::size_t i = spec.X.index(a, b, c);
                std::int64_t d = delta_of(r, spec.A[i], spec.B[i]);
                if (d != first)
                    throw NotConstant("delta is " + std::to_string(first) + " at (1,1,1) but " +
                                      std::to_string(d) + " at " + triple_str(a, b, c));
            }
    return first;
}

std::int64_t derive_w(const BracketSpec& spec) {
    require_units(spec);
    ModulusRing r(spec.modulus);
    int n = spec.X.size();
    std::int64_t first = w_of(r, spec.A[0], spec.B[0]);
    std::int64_t first_inv = r.inv(first);
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            std::size_t i = spec.X.index(a, b, b);
            std::int64_t w = w_of(r, spec.A[i], spec.B[i]);
            if (w != first)
                throw NotConstant("w is " + std::to_string(first) + " at (1,1,1) but " + std::to_string(w) +
                                  " at " + triple_str(a, b, b));
            std::int64_t neg_kink = r.neg(r.mul(r.pow(spec.A[i], -2), spec.B[i]));
            if (neg_kink != first_inv)
                throw NotConstant("-A^-2 B at " + triple_str(a, b, b) + " is not w^-1");
        }
    return first;
}

BracketAxiomReport verify_bracket(const BracketSpec& raw, SkeinVariant variant, std::size_t max_violations) {
    check_shape(raw);
    BracketSpec spec = reduced(raw);
    BracketAxiomReport rep;
    ModulusRing r(spec.modulus);
    const Tribracket& X = spec.X;
    int n = X.size();

    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            for (int c = 1; c <= n; ++c) {
                std::size_t i = X.index(a, b, c);
                if (!r.is_unit(spec.A[i]) || !r.is_unit(spec.B[i])) {
                    rep.units_ok = false;
                    rep.notes.push_back("non-unit coefficient at " + triple_str(a, b, c));
                }
            }
    if (!rep.units_ok) {
        rep.valid = rep.delta_ok = rep.w_ok = false;
        return rep;
    }

    try {
        rep.delta = derive_delta(spec);
    } catch (const NotConstant& e) {
        rep.delta_ok = false;
        rep.notes.push_back(e.what());
    }
    try {
        rep.w = derive_w(spec);
    } catch (const NotConstant& e) {
        rep.w_ok = false;
        rep.notes.push_back(e.what());
    }

    // The skein equations are still checked with the (1,1,1) value of delta so
    // that every failing equation is reported.
    std::int64_t delta = rep.delta.value_or(delta_of(r, spec.A[0], spec.B[0]));
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            for (int c = 1; c <= n; ++c)
                for (int d = 1; d <= n; ++d) {
                    unsigned fail = detail::skein_failures(r, spec.A.data(), spec.B.data(), delta,
                                                           detail::skein_triples(X, a, b, c, d), variant);
                    for (int k = 0; k < 5; ++k)
                        if (fail & (1u << k)) {
                            rep.valid = false;
                            if (max_violations == 0 || rep.skein_violations.size() < max_violations)
                                rep.skein_violations.push_back({detail::skein_name(k), {a, b, c, d}});
                        }
                }
    rep.valid = rep.valid && rep.delta_ok && rep.w_ok && rep.skein_violations.empty();
    return rep;
}

Bracket make_bracket(BracketSpec spec, SkeinVariant variant) {
    require_units(spec);
    spec = reduced(std::move(spec));
    BracketAxiomReport rep = verify_bracket(spec, variant, 1);
    if (!rep.valid) {
        std::string why = !rep.notes.empty() ? rep.notes.front()
                          : !rep.skein_violations.empty()
                              ? "equation " + rep.skein_violations.front().axiom + " fails at (" +
                                    std::to_string(rep.skein_violations.front().witness[0]) + "," +
                                    std::to_string(rep.skein_violations.front().witness[1]) + "," +
                                    std::to_string(rep.skein_violations.front().witness[2]) + "," +
                                    std::to_string(rep.skein_violations.front().witness[3]) + ")"
                              : "axioms fail";
        throw InvalidBracket("not a tribracket bracket: " + why);
    }
    return Bracket(std::move(spec), *rep.delta, *rep.w);
}

Bracket make_kauffman(std::int64_t m, std::int64_t a) {
    ModulusRing r(m);
    if (!r.is_unit(a)) throw NonUnit(std::to_string(a) + " is not a unit modulo " + std::to_string(m));
    return make_bracket({Tribracket(1, {1}), m, {r.reduce(a)}, {r.inv(a)}});
}

CocycleResult make_cocycle(const Tribracket& X, std::int64_t m, const std::vector<std::int64_t>& phi) {
    BracketSpec spec{X, m, phi, phi};
    require_units(spec);
    CocycleResult res;
    res.report = verify_bracket(spec);
    if (res.report.valid) res.bracket = make_bracket(spec);
    return res;
}

bool bracket_less(const Bracket& x, const Bracket& y) {
    const auto& p = x.spec();
    const auto& q = y.spec();
    if (p.A != q.A) return p.A < q.A;
    return p.B < q.B;
}

namespace {

// Depth-first assignment of the 2 n^3 coefficients in a fixed cell order.
class BracketSearch {
public:
    BracketSearch(const Tribracket& X, std::int64_t m) : X_(X), r_(m), cells_(X.flat().size()) {
        for (std::int64_t u = 1; u < m; ++u)
            if (r_.is_unit(u)) units_.push_back(u);
        build_order();
        build_checks();
    }

    std::size_t positions() const { return order_.size(); }
    const std::vector<std::int64_t>& units() const { return units_; }

    struct State {
        std::vector<std::int64_t> A, B;
        std::int64_t delta = 0, w = 0;
    };

    State fresh() const { return {std::vector<std::int64_t>(cells_, 0), std::vector<std::int64_t>(cells_, 0)}; }

    void set(State& s, std::size_t pos, std::int64_t v) const {
        const Cell& c = order_[pos];
        (c.is_b ? s.B : s.A)[c.triple] = v;
    }

    // Runs the checks attached to position pos; may fix delta or w in the state.
    bool checks(State& s, std::size_t pos) const {
        const Cell& cell = order_[pos];
        std::size_t t = cell.triple;
        if (s.A[t] && s.B[t]) {
            std::int64_t d = delta_of(r_, s.A[t], s.B[t]);
            if (pos == delta_pos_)
                s.delta = d;
            else if (d != s.delta)
                return false;
            if (degenerate_[t]) {
                std::int64_t w = w_of(r_, s.A[t], s.B[t]);
                if (pos == w_pos_)
                    s.w = w;
                else if (w != s.w)
                    return false;
            }
        }
        for (const auto& q : checks_[pos])
            if (detail::skein_failures(r_, s.A.data(), s.B.data(), s.delta, q, SkeinVariant::corrected))
                return false;
        return true;
    }

    void run(State& s, std::size_t pos, std::vector<BracketSpec>& out) const {
        if (pos == order_.size()) {
            out.push_back({X_, r_.modulus(), s.A, s.B});
            return;
        }
        for (std::int64_t u : units_) {
            set(s, pos, u);
            if (checks(s, pos)) run(s, pos + 1, out);
        }
        set(s, pos, 0);
    }

private:
    struct Cell {
        std::size_t triple;
        bool is_b;
    };

    void build_order() {
        int n = X_.size();
        degenerate_.assign(cells_, false);
        std::vector<std::size_t> deg;
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b) {
                deg.push_back(X_.index(a, b, b));
                degenerate_[X_.index(a, b, b)] = true;
            }
        for (auto t : deg) order_.push_back({t, false});
        for (auto t : deg) order_.push_back({t, true});
        delta_pos_ = deg.size();
        w_pos_ = deg.size();

        // Remaining triples, greedily chosen to complete as many quadruples as possible.
        std::vector<bool> done(cells_, false);
        for (auto t : deg) done[t] = true;
        std::vector<std::array<std::size_t, 6>> quads;
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b)
                for (int c = 1; c <= n; ++c)
                    for (int d = 1; d <= n; ++d) quads.push_back(detail::skein_triples(X_, a, b, c, d));
        for (std::size_t left = cells_ - deg.size(); left > 0; --left) {
            std::size_t best = cells_;
            long best_score = -1;
            for (std::size_t t = 0; t < cells_; ++t) {
                if (done[t]) continue;
                long score = 0;
                for (const auto& q : quads) {
                    bool uses = false, rest = true;
                    for (auto i : q) {
                        if (i == t) uses = true;
                        else if (!done[i]) rest = false;
                    }
                    score += uses && rest;
                }
                if (score > best_score) {
                    best_score = score;
                    best = t;
                }
            }
            done[best] = true;
            order_.push_back({best, false});
            order_.push_back({best, true});
        }
    }

    void build_checks() {
        int n = X_.size();
        std::vector<std::size_t> pos_a(cells_), pos_b(cells_);
        for (std::size_t p = 0; p < order_.size(); ++p)
            (order_[p].is_b ? pos_b : pos_a)[order_[p].triple] = p;
        checks_.assign(order_.size(), {});
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b)
                for (int c = 1; c <= n; ++c)
                    for (int d = 1; d <= n; ++d) {
                        auto q = detail::skein_triples(X_, a, b, c, d);
                        std::size_t last = 0;
                        for (auto i : q) last = std::max({last, pos_a[i], pos_b[i]});
                        checks_[last].push_back(q);
                    }
    }

    const Tribracket& X_;
    ModulusRing r_;
    std::size_t cells_;
    std::vector<std::int64_t> units_;
    std::vector<Cell> order_;
    std::vector<bool> degenerate_;
    std::size_t delta_pos_ = 0, w_pos_ = 0;
    std::vector<std::vector<std::array<std::size_t, 6>>> checks_;
};

std::vector<BracketSpec> oracle_search(const Tribracket& X, std::int64_t m) {
    ModulusRing r(m);
    std::vector<std::int64_t> units;
    for (std::int64_t u = 1; u < m; ++u)
        if (r.is_unit(u)) units.push_back(u);
    std::size_t cells = X.flat().size();
    double total = 1;
    for (std::size_t i = 0; i < 2 * cells; ++i) total *= static_cast<double>(units.size());
    if (total > 1e8) throw BoundExceeded("unpruned search space has more than 1e8 assignments");
    std::vector<std::size_t> digit(2 * cells, 0);
    std::vector<BracketSpec> out;
    for (;;) {
        BracketSpec s{X, m, std::vector<std::int64_t>(cells), std::vector<std::int64_t>(cells)};
        for (std::size_t i = 0; i < cells; ++i) {
            s.A[i] = units[digit[i]];
            s.B[i] = units[digit[cells + i]];
        }
        if (verify_bracket(s, SkeinVariant::corrected, 1).valid) out.push_back(std::move(s));
        std::size_t k = 0;
        while (k < digit.size() && ++digit[k] == units.size()) digit[k++] = 0;
        if (k == digit.size()) break;
    }
    return out;
}

}  // namespace

std::vector<Bracket> search_brackets(const Tribracket& X, std::int64_t m, const SearchOptions& opts) {
    if (X.size() > opts.bound + 1)
        throw BoundExceeded("bracket search on a tribracket of size " + std::to_string(X.size()) +
                            " exceeds the bound " + std::to_string(opts.bound));
    if (X.size() > opts.bound)
        std::cerr << "warning: bracket search on a tribracket of size " << X.size() << " may take a long time\n";
    if (!verify_tribracket(X, 1).valid) throw NotQuasigroup("input is not a tribracket");
    ModulusRing ring(m);

    std::vector<BracketSpec> found;
    if (!opts.prune) {
        found = oracle_search(X, m);
    } else {
        BracketSearch search(X, m);
        const auto& units = search.units();
        std::size_t depth = std::min<std::size_t>(2, search.positions());
        std::size_t prefixes = depth == 2 ? units.size() * units.size() : units.size();
        std::vector<std::vector<BracketSpec>> parts(prefixes);
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i; (i = next++) < prefixes;) {
                auto s = search.fresh();
                search.set(s, 0, units[i % units.size()]);
                if (!search.checks(s, 0)) continue;
                if (depth == 2) {
                    search.set(s, 1, units[i / units.size()]);
                    if (!search.checks(s, 1)) continue;
                }
                search.run(s, depth, parts[i]);
            }
        };
        unsigned w = std::max(1u, opts.workers);
        std::vector<std::thread> pool;
        for (unsigned i = 1; i < w; ++i) pool.emplace_back(worker);
        worker();
        for (auto& th : pool) th.join();
        for (auto& p : parts)
            for (auto& s : p) found.push_back(std::move(s));
    }

    std::vector<Bracket> out;
    out.reserve(found.size());
    for (auto& s : found) out.push_back(make_bracket(std::move(s)));
    std::sort(out.begin(), out.end(), bracket_less);
    if (opts.limit && out.size() > opts.limit) out.erase(out.begin() + static_cast<std::ptrdiff_t>(opts.limit), out.end());
    return out;
}

}  // namespace tribracket
