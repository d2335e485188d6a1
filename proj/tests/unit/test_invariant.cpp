#include <doctest.h>

#include <functional>
#include <set>

#include "../oracles.hpp"
#include "tribracket/bracket.hpp"
#include "tribracket/builtins.hpp"
#include "tribracket/catalog.hpp"
#include "tribracket/errors.hpp"
#include "tribracket/invariant.hpp"

using namespace tribracket;

namespace {

std::vector<Coloring> brute_colorings(const LinkDiagram& d, const Tribracket& X) {
    std::vector<Coloring> out;
    Coloring col(d.faces.size(), 1);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == col.size()) {
            for (int x = 0; x < d.crossings(); ++x) {
                const auto& r = d.roles[x];
                if (X(col[r[kA]], col[r[kB]], col[r[kC]]) != col[r[kD]]) return;
            }
            out.push_back(col);
            return;
        }
        for (int v = 1; v <= X.size(); ++v) {
            col[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

std::vector<Bracket> shipped() {
    return {builtin_bracket("z7"), builtin_bracket("beta1"), builtin_bracket("beta2")};
}

LinkDiagram named(const std::string& n, std::uint64_t mask = 0) {
    return build_diagram(Catalog::builtin().get(n).pd, mask);
}

}  // namespace

TEST_CASE("polynomial rendering") {
    InvariantPolynomial p = InvariantPolynomial::parse("u+u^4+2u^2", 5);
    CHECK(p.str() == "u^4+2u^2+u");
    CHECK(p.total() == 4);
    CHECK(InvariantPolynomial::parse("4u^6+4u", 7).str() == "4u^6+4u");
    CHECK(InvariantPolynomial::parse("3+u^0", 5).str() == "4");
    CHECK(InvariantPolynomial::parse("8u", 7).multiset() == std::vector<std::int64_t>(8, 1));
    CHECK(InvariantPolynomial::parse("4u^2", 5).to_json().dump() == R"({"modulus":5,"terms":{"2":4}})");
    CHECK(InvariantPolynomial::parse("4u^4+3u^3+u^2", 5).to_json().dump() ==
          R"({"modulus":5,"terms":{"2":1,"3":3,"4":4}})");
    CHECK(InvariantPolynomial(5).str() == "0");
    CHECK_THROWS_AS(InvariantPolynomial::parse("4yu^2", 5), ParseError);
    CHECK_THROWS_AS(InvariantPolynomial::parse("u^", 5), ParseError);
    CHECK_THROWS_AS(InvariantPolynomial::parse("2u+", 5), ParseError);
}

TEST_CASE("counting invariant") {
    Tribracket ex1 = builtin_tribracket("ex1");
    CHECK(counting_invariant(named("0_1"), ex1) == 9);
    CHECK(counting_invariant(named("3_1"), ex1) == 27);
    CHECK(counting_invariant(build_diagram(parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)")), ex1) == 27);
    CHECK(counting_invariant(named("L2a1"), builtin_tribracket("ex2")) == 8);

    std::vector<Tribracket> xs = {ex1, builtin_tribracket("ex2"), builtin_tribracket("ex2b"), make_alexander(5, 2, 3),
                                  Tribracket(1, {1})};
    for (const auto& X : xs) {
        std::uint64_t n = X.size();
        for (const char* u : {"0_1", "fix_unknot_r2", "fix_unknot_plain"}) CHECK(counting_invariant(named(u), X) == n * n);
        for (const char* u : {"fix_unlink_r2", "fix_unlink_split"})
            CHECK(counting_invariant(named(u), X) == n * n * n);
    }
}

TEST_CASE("coloring search agrees with brute force") {
    std::vector<Tribracket> xs = {builtin_tribracket("ex1"), builtin_tribracket("ex2"), builtin_tribracket("ex2b")};
    for (const auto* e : Catalog::builtin().list({"", -1, 5})) {
        for (const auto& X : xs) {
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << e->components); ++mask) {
                LinkDiagram d = build_diagram(e->pd, mask);
                auto fast = enumerate_colorings(d, X);
                CHECK(fast == brute_colorings(d, X));
            }
        }
    }
}

TEST_CASE("orientation reversal keeps the coloring count") {
    std::vector<Tribracket> xs = {builtin_tribracket("ex1"), builtin_tribracket("ex2"), make_alexander(5, 2, 3)};
    for (const auto* e : Catalog::builtin().list()) {
        LinkDiagram d = build_diagram(e->pd, e->orientation);
        LinkDiagram r = build_diagram(e->pd, e->orientation ^ ((std::uint64_t{1} << d.components) - 1));
        for (const auto& X : xs) CHECK(counting_invariant(d, X) == counting_invariant(r, X));
    }
}

TEST_CASE("fixture coloring counts agree for every 3-element tribracket") {
    std::map<std::string, std::vector<const CatalogEntry*>> groups;
    for (const auto* e : Catalog::builtin().list({"fixture"})) groups[e->group].push_back(e);
    auto all = enumerate_tribrackets(3);
    REQUIRE(all.size() == 12);
    for (const auto& X : all)
        for (const auto& [g, members] : groups) {
            auto ref = counting_invariant(build_diagram(members[0]->pd, members[0]->orientation), X);
            for (const auto* e : members)
                CHECK_MESSAGE(counting_invariant(build_diagram(e->pd, e->orientation), X) == ref, g, " ", e->name);
        }
}

TEST_CASE("state sum") {
    Bracket z7 = builtin_bracket("z7");
    // The displayed Hopf coloring: triples (1,2,1) and (1,1,2) at two positive crossings.
    ModulusRing r(7);
    std::int64_t by_hand =
        r.mul(r.pow(4, -2), r.add(r.add(r.mul(r.mul(2, 3), 1), r.mul(r.mul(2, 1), 6)),
                                  r.add(r.mul(r.mul(3, 3), 6), r.mul(r.mul(3, 1), 1))));
    CHECK(by_hand == 6);
    bool found = false;
    for (std::uint64_t mask = 0; mask < 4 && !found; ++mask) {
        LinkDiagram h = named("L2a1", mask);
        if (h.positive != 2) continue;
        for (const auto& c : enumerate_colorings(h, z7.tribracket())) {
            std::multiset<std::array<int, 3>> triples;
            for (int x = 0; x < 2; ++x) triples.insert({c[h.roles[x][kA]], c[h.roles[x][kB]], c[h.roles[x][kC]]});
            if (triples == std::multiset<std::array<int, 3>>{{1, 2, 1}, {1, 1, 2}}) {
                CHECK(beta(h, z7, c) == 6);
                found = true;
            }
        }
    }
    CHECK(found);

    LinkDiagram u = build_diagram(parse_pd("U(1)"));
    for (const auto& b : shipped())
        for (const auto& c : enumerate_colorings(u, b.tribracket())) CHECK(beta(u, b, c) == b.delta());
}

TEST_CASE("worked examples") {
    Bracket z7 = builtin_bracket("z7");
    std::set<std::string> hopf, torus;
    for (std::uint64_t m = 0; m < 4; ++m) {
        hopf.insert(phi(named("L2a1", m), z7).str());
        torus.insert(phi(named("T4_2", m), z7).str());
    }
    CHECK(hopf.count("4u^6+4u"));
    CHECK(torus.count("8u"));
    CHECK(phi(named("L2a1"), z7).multiset() == std::vector<std::int64_t>{1, 1, 1, 1, 6, 6, 6, 6});
    CHECK(phi_multiset(named("0_1"), z7) == std::vector<std::int64_t>{6, 6, 6, 6});
    CHECK(phi(named("3_1"), builtin_bracket("beta1")).str() == "4u^2");
    CHECK(phi(named("L7a7"), z7, 4) == phi(named("L7a7"), z7, 1));
}

TEST_CASE("coefficient sums equal the counting invariant") {
    for (const auto& b : shipped())
        for (const auto* e : Catalog::builtin().list()) {
            LinkDiagram d = build_diagram(e->pd, e->orientation);
            CHECK(phi(d, b).total() == counting_invariant(d, b.tribracket()));
        }
}

TEST_CASE("Reidemeister fixtures") {
    std::map<std::string, std::vector<const CatalogEntry*>> groups;
    for (const auto* e : Catalog::builtin().list({"fixture"})) groups[e->group].push_back(e);
    CHECK(groups.size() >= 8);
    std::vector<Bracket> brackets = shipped();
    brackets.push_back(make_kauffman(7, 3));
    brackets.push_back(*make_cocycle(builtin_tribracket("ex2"), 5, std::vector<std::int64_t>(8, 1)).bracket);
    for (const auto& [g, members] : groups) {
        REQUIRE(members.size() >= 2);
        for (const auto& b : brackets) {
            auto ref = phi(build_diagram(members[0]->pd, members[0]->orientation), b);
            for (const auto* e : members)
                CHECK_MESSAGE(phi(build_diagram(e->pd, e->orientation), b) == ref, g, " ", e->name);
        }
    }
}

TEST_CASE("Kauffman reduction") {
    for (std::int64_t m : {5, 7, 11})
        for (std::int64_t a = 2; a < m; ++a) {
            Bracket k = make_kauffman(m, a);
            for (const auto* e : Catalog::builtin().list({"knot", 3, 7})) {
                InvariantPolynomial p = phi(build_diagram(e->pd), k);
                REQUIRE(p.terms().size() == 1);
                CHECK(p.terms().begin()->second == 1);
                CHECK(p.terms().begin()->first == oracle::kauffman_normalized(e->pd.crossings, a, m));
            }
        }
}

TEST_CASE("cocycle reduction is constant per diagram") {
    for (std::int64_t m : {5, 7}) {
        Bracket one = *make_cocycle(builtin_tribracket("ex2"), m, std::vector<std::int64_t>(8, 1)).bracket;
        for (const auto* e : Catalog::builtin().list()) {
            LinkDiagram d = build_diagram(e->pd, e->orientation);
            InvariantPolynomial p = phi(d, one);
            CHECK(p.terms().size() == 1);
            CHECK(p.total() == counting_invariant(d, one.tribracket()));
        }
    }
}
