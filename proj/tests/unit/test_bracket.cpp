#include <doctest.h>

#include <algorithm>
#include <random>

#include "../oracles.hpp"
#include "tribracket/bracket.hpp"
#include "tribracket/builtins.hpp"
#include "tribracket/errors.hpp"

using namespace tribracket;

namespace {

std::vector<std::int64_t> units_of(std::int64_t m) {
    std::vector<std::int64_t> u;
    for (std::int64_t x = 1; x < m; ++x)
        if (std::gcd(x, m) == 1) u.push_back(x);
    return u;
}

bool contains(const std::vector<Bracket>& v, const BracketSpec& s) {
    return std::any_of(v.begin(), v.end(), [&](const Bracket& b) { return b.spec() == s; });
}

void check_kink_identities(const Bracket& b) {
    const ModulusRing& r = b.ring();
    int n = b.tribracket().size();
    for (int a = 1; a <= n; ++a)
        for (int c = 1; c <= n; ++c) {
            std::int64_t A = b.A(a, c, c), B = b.B(a, c, c);
            CHECK(r.mul(b.w(), r.neg(r.mul(r.pow(A, -2), B))) == 1);
            CHECK(b.w() == r.add(r.mul(A, b.delta()), B));
        }
}

}  // namespace

TEST_CASE("delta and w of the shipped brackets") {
    BracketSpec z7 = builtin_bracket_spec("z7");
    CHECK(derive_delta(z7) == 6);
    CHECK(derive_w(z7) == 4);
    CHECK(derive_w(builtin_bracket_spec("beta1")) == 1);
    CHECK(derive_delta(builtin_bracket_spec("beta1")) == 2);
    CHECK(derive_delta(builtin_bracket_spec("beta2")) == 2);
    CHECK_THROWS_AS(derive_delta(builtin_bracket_spec("beta2-printed")), NotConstant);

    Tribracket ex2 = builtin_tribracket("ex2");
    for (std::int64_t a : units_of(7)) {
        BracketSpec same{ex2, 7, std::vector<std::int64_t>(8, a), std::vector<std::int64_t>(8, a)};
        CHECK(derive_delta(same) == 5);
        CHECK(derive_w(same) == ModulusRing(7).neg(a));
        ModulusRing r(7);
        BracketSpec kauff{Tribracket(1, {1}), 7, {a}, {r.inv(a)}};
        CHECK(derive_delta(kauff) == r.neg(r.add(r.mul(a, a), r.pow(a, -2))));
    }
}

TEST_CASE("axiom verification") {
    for (const char* name : {"z7", "beta1", "beta2"}) {
        BracketAxiomReport rep = verify_bracket(builtin_bracket_spec(name));
        CHECK_MESSAGE(rep.valid, name);
        CHECK(rep.skein_violations.empty());
        CHECK_FALSE(verify_bracket(builtin_bracket_spec(name), SkeinVariant::printed).valid);
        Bracket b = builtin_bracket(name);
        check_kink_identities(b);
    }
    BracketAxiomReport printed = verify_bracket(builtin_bracket_spec("beta2-printed"));
    CHECK_FALSE(printed.valid);
    CHECK_FALSE(printed.delta_ok);
    CHECK_THROWS_AS(builtin_bracket("beta2-printed"), InvalidBracket);

    Tribracket ex2 = builtin_tribracket("ex2");
    BracketSpec ones{ex2, 7, std::vector<std::int64_t>(8, 1), std::vector<std::int64_t>(8, 1)};
    CHECK(verify_bracket(ones).valid);
    CHECK_FALSE(verify_bracket(ones, SkeinVariant::printed).valid);

    BracketSpec nonunit = builtin_bracket_spec("beta1");
    nonunit.A[3] = 0;
    CHECK_THROWS_AS(require_units(nonunit), NonUnit);
    CHECK_FALSE(verify_bracket(nonunit).units_ok);
    CHECK_THROWS_AS(make_bracket(nonunit), NonUnit);
}

TEST_CASE("every single-entry mutation breaks the shipped brackets") {
    for (const char* name : {"z7", "beta1", "beta2"}) {
        BracketSpec base = builtin_bracket_spec(name);
        for (std::size_t i = 0; i < 2 * base.A.size(); ++i)
            for (std::int64_t u : units_of(base.modulus)) {
                BracketSpec s = base;
                auto& slot = i < s.A.size() ? s.A[i] : s.B[i - s.A.size()];
                if (slot == u) continue;
                slot = u;
                CHECK_FALSE(verify_bracket(s, SkeinVariant::corrected, 1).valid);
            }
    }
}

TEST_CASE("Kauffman and cocycle constructions") {
    Bracket k = make_kauffman(7, 2);
    ModulusRing r7(7);
    CHECK(k.delta() == r7.neg(r7.add(4, r7.inv(4))));
    CHECK(k.w() == r7.neg(8));
    Bracket k5 = make_kauffman(5, 1);
    CHECK(k5.delta() == 3);
    CHECK(k5.w() == 4);
    CHECK_THROWS_AS(make_kauffman(4, 2), NonUnit);

    Tribracket ex2 = builtin_tribracket("ex2");
    CocycleResult one = make_cocycle(ex2, 7, std::vector<std::int64_t>(8, 1));
    REQUIRE(one.bracket.has_value());
    CHECK(one.report.valid);
    CHECK(one.bracket->delta() == 5);
    CHECK(one.bracket->w() == 6);

    Tribracket ex1 = builtin_tribracket("ex1");
    std::mt19937 rng(7);
    int invalid = 0, with_first = 0;
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<std::int64_t> phi(27);
        for (auto& v : phi) v = 1 + static_cast<std::int64_t>(rng() % 6);
        CocycleResult res = make_cocycle(ex1, 7, phi);
        CHECK(res.report.valid == oracle::is_bracket(ex1.flat(), 3, 7, phi, phi));
        if (!res.report.valid) {
            ++invalid;
            CHECK_FALSE(res.bracket.has_value());
            for (const auto& v : res.report.skein_violations)
                if (v.axiom == "ii.i") {
                    ++with_first;
                    break;
                }
        }
    }
    CHECK(invalid >= 38);
    CHECK(with_first >= 1);
}

TEST_CASE("search on the one-element tribracket") {
    Tribracket one(1, {1});
    for (std::int64_t m = 2; m <= 7; ++m) {
        auto pruned = search_brackets(one, m);
        SearchOptions o;
        o.prune = false;
        auto unpruned = search_brackets(one, m, o);
        REQUIRE(pruned.size() == unpruned.size());
        for (std::size_t i = 0; i < pruned.size(); ++i) CHECK(pruned[i] == unpruned[i]);

        std::vector<std::pair<std::int64_t, std::int64_t>> brute;
        for (auto a : units_of(m))
            for (auto b : units_of(m))
                if (oracle::is_bracket({1}, 1, m, {a}, {b})) brute.push_back({a, b});
        REQUIRE(pruned.size() == brute.size());
        for (std::size_t i = 0; i < brute.size(); ++i) {
            CHECK(pruned[i].A(1, 1, 1) == brute[i].first);
            CHECK(pruned[i].B(1, 1, 1) == brute[i].second);
        }
        for (auto a : units_of(m)) {
            ModulusRing r(m);
            CHECK(contains(pruned, {one, m, {a}, {r.inv(a)}}));
        }
    }
}

TEST_CASE("search on two-element tribrackets") {
    for (const char* tn : {"ex2", "ex2b"}) {
        Tribracket x = builtin_tribracket(tn);
        for (std::int64_t m = 2; m <= 4; ++m) {
            auto pruned = search_brackets(x, m);
            SearchOptions o;
            o.prune = false;
            auto unpruned = search_brackets(x, m, o);
            REQUIRE(pruned.size() == unpruned.size());
            for (std::size_t i = 0; i < pruned.size(); ++i) CHECK(pruned[i] == unpruned[i]);
        }
        auto five = search_brackets(x, 5);
        auto oracle_set = oracle::brackets_by_delta_class(x.flat(), 2, 5);
        REQUIRE(five.size() == oracle_set.size());
        std::size_t i = 0;
        for (const auto& [A, B] : oracle_set) {
            CHECK(five[i].spec().A == A);
            CHECK(five[i].spec().B == B);
            ++i;
        }
    }

    Tribracket ex2 = builtin_tribracket("ex2");
    auto z7 = search_brackets(ex2, 7);
    CHECK(contains(z7, builtin_bracket_spec("z7")));
    CHECK(std::is_sorted(z7.begin(), z7.end(), bracket_less));
    for (const auto& b : z7) check_kink_identities(b);

    auto z5 = search_brackets(ex2, 5);
    CHECK(contains(z5, builtin_bracket_spec("beta1")));
    CHECK(contains(z5, builtin_bracket_spec("beta2")));
    CHECK_FALSE(contains(z5, builtin_bracket_spec("beta2-printed")));
    for (const auto& b : z5) {
        const auto& s = b.spec();
        CHECK(oracle::is_bracket(s.X.flat(), 2, 5, s.A, s.B));
    }

    SearchOptions par;
    par.workers = 3;
    auto z5p = search_brackets(ex2, 5, par);
    REQUIRE(z5p.size() == z5.size());
    for (std::size_t i = 0; i < z5.size(); ++i) CHECK(z5p[i] == z5[i]);

    SearchOptions lim;
    lim.limit = 5;
    auto few = search_brackets(ex2, 5, lim);
    REQUIRE(few.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) CHECK(few[i] == z5[i]);

    CHECK_THROWS_AS(search_brackets(builtin_tribracket("ex1"), 5, SearchOptions{0, 1, 1, true}), BoundExceeded);
}
