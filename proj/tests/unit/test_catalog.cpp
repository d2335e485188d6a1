#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "../oracles.hpp"
#include "cli/commands.hpp"
#include "cli/expected_tables.hpp"
#include "tribracket/builtins.hpp"
#include "tribracket/catalog.hpp"
#include "tribracket/errors.hpp"
#include "tribracket/io.hpp"

using namespace tribracket;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult cli_run(std::vector<std::string> args) {
    args.insert(args.begin(), "tribracket");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> names(const std::vector<const CatalogEntry*>& es) {
    std::vector<std::string> out;
    for (const auto* e : es) out.push_back(e->name);
    return out;
}

}  // namespace

TEST_CASE("catalog lookups") {
    const Catalog& c = Catalog::builtin();
    CHECK(c.get("3_1").crossings() == 3);
    CHECK(c.get("L2a1").crossings() == 2);
    CHECK(c.get("L2a1").components == 2);
    CHECK(c.get("SK").crossings() == 6);
    CHECK(c.get("GK").crossings() == 6);
    CHECK(c.get("T4_2").has_tag("torus"));
    try {
        c.get("9_1");
        FAIL("9_1 resolved");
    } catch (const UnknownName& e) {
        CHECK(std::string(e.what()).find("did you mean") != std::string::npos);
    }
    CHECK_THROWS_AS(c.get("L2a"), UnknownName);
}

TEST_CASE("catalog coverage") {
    const Catalog& c = Catalog::builtin();
    auto knots = c.list({"knot", 3, 8});
    CHECK(knots.size() == 35);
    CHECK(c.list({"knot"}).size() == 36);
    CHECK(names(knots).front() == "3_1");
    CHECK(names(knots)[14] == "8_1");
    CHECK(names(knots).back() == "8_21");
    auto ns = names(knots);
    CHECK(std::find(ns.begin(), ns.end(), "8_10") - std::find(ns.begin(), ns.end(), "8_9") == 1);

    std::vector<std::string> table_links;
    for (const auto& r : cli::expected_table("beta1"))
        if (r.name[0] == 'L') table_links.push_back(r.name);
    std::vector<std::string> catalog_links = names(c.list({"link"}));
    std::sort(table_links.begin(), table_links.end());
    std::sort(catalog_links.begin(), catalog_links.end());
    CHECK(table_links == catalog_links);
    for (const char* b : {"beta1", "beta2"})
        for (const auto& r : cli::expected_table(b)) CHECK_MESSAGE(c.contains(r.name), r.name);
    CHECK(cli::expected_table("beta1").size() == 54);
    CHECK(cli::expected_table("beta2").size() == 54);
    CHECK(cli::expected_table("z7").empty());

    for (const auto* e : c.list()) {
        LinkDiagram d = build_diagram(e->pd, e->orientation);
        CHECK_MESSAGE(d.components == e->components, e->name);
        if (e->crossings() > 0) CHECK(d.faces.size() == static_cast<std::size_t>(e->crossings() + 2));
    }
}

TEST_CASE("composites are connected sums of trefoils") {
    const Catalog& c = Catalog::builtin();
    for (std::int64_t m : {7, 11, 13})
        for (std::int64_t a = 2; a < m; ++a) {
            std::int64_t delta = oracle::md(-a * a - oracle::inv_brute(a * a % m, m), m);
            std::int64_t t = oracle::kauffman_normalized(c.get("3_1").pd.crossings, a, m);
            std::int64_t tm = oracle::kauffman_normalized(mirror(c.get("3_1").pd).crossings, a, m);
            std::int64_t sk = oracle::kauffman_normalized(c.get("SK").pd.crossings, a, m);
            std::int64_t gk = oracle::kauffman_normalized(c.get("GK").pd.crossings, a, m);
            CHECK(oracle::md(sk * delta, m) == oracle::md(t * tm, m));
            bool granny = oracle::md(gk * delta, m) == oracle::md(t * t, m) ||
                          oracle::md(gk * delta, m) == oracle::md(tm * tm, m);
            CHECK(granny);
        }
}

TEST_CASE("catalog assets") {
    Catalog dir = Catalog::load_directory(TRIBRACKET_SOURCE_DIR "/data/catalog");
    CHECK(dir.size() == Catalog::builtin().size());
    for (const auto* e : dir.list()) CHECK(Catalog::builtin().get(e->name).pd_text == e->pd_text);

    CatalogEntry e = parse_catalog_entry("x.txt", "name: x\npd: X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)\ncomponents: 1\ntags: knot\n");
    CHECK(e.crossings() == 3);
    CHECK_THROWS_AS(parse_catalog_entry("x.txt", "name: x\ncomponents: 1\n"), ParseError);
    CHECK_THROWS_AS(Catalog::from_assets({{"a.txt", "name: a\npd: X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)\ncomponents: 2\n"}}),
                    ParseError);
    std::string t = "name: a\npd: X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)\ncomponents: 1\n";
    CHECK_THROWS_AS(Catalog::from_assets({{"a.txt", t}, {"b.txt", t}}), ParseError);
}

TEST_CASE("json round trips") {
    for (const auto& n : builtin_tribracket_names()) {
        Tribracket t = builtin_tribracket(n);
        CHECK(tribracket_from_json(to_json(t)) == t);
        CHECK(tribracket_from_json(to_json(t)["tensor"]) == t);
    }
    for (const auto& n : builtin_bracket_names()) {
        BracketSpec s = builtin_bracket_spec(n);
        BracketSpec r = bracket_from_json(to_json(s));
        CHECK(r.X == s.X);
        CHECK(r.modulus == s.modulus);
        CHECK(r.A == s.A);
        CHECK(r.B == s.B);
    }
    CHECK_THROWS_AS(tribracket_from_json(nlohmann::json::parse(R"({"n":2,"tensor":[[[1,2],[2,1]]]})")), ParseError);
    CHECK_THROWS_AS(tribracket_from_json(nlohmann::json::parse(R"([[[0,2],[2,1]],[[1,2],[2,1]]])")), ParseError);
    CHECK_THROWS_AS(load_tribracket("no-such-name"), UnknownName);
    CHECK_THROWS_AS(load_bracket("/no/such/file.json"), ParseError);
}

TEST_CASE("command line") {
    auto r = cli_run({"verify-tribracket", "ex1"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("\"valid\": true") != std::string::npos);

    r = cli_run({"verify-bracket", "z7"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("\"delta\": 6") != std::string::npos);
    CHECK(r.out.find("\"w\": 4") != std::string::npos);

    r = cli_run({"verify-bracket", "beta2-printed"});
    CHECK(r.code == cli::kCheckFailed);
    r = cli_run({"verify-bracket", "beta1", "--printed"});
    CHECK(r.code == cli::kCheckFailed);

    r = cli_run({"invariant", "-d", "L2a1", "-b", "z7", "--all-orientations"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("4u^6+4u") != std::string::npos);
    r = cli_run({"invariant", "-d", "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)", "-t", "ex1"});
    CHECK(r.code == cli::kOk);
    CHECK(nlohmann::json::parse(r.out)["coloring_count"] == 27);

    r = cli_run({"invariant", "-d", "9_1", "-b", "z7"});
    CHECK(r.code == cli::kInput);
    CHECK(r.err.find("did you mean") != std::string::npos);
    r = cli_run({"invariant", "-d", "X(1,2,3)", "-b", "z7"});
    CHECK(r.code == cli::kInput);
    r = cli_run({"enumerate", "-n", "5"});
    CHECK(r.code == cli::kResource);
    r = cli_run({"enumerate", "-n", "2"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("# 2 tribrackets of size 2") != std::string::npos);
    r = cli_run({"search-brackets", "ex2", "-m", "7", "--limit", "3"});
    CHECK(r.code == cli::kOk);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 3);
    r = cli_run({"catalog", "--tag", "link"});
    CHECK(r.code == cli::kOk);
    r = cli_run({"diagram", "-d", "3_1"});
    CHECK(r.code == cli::kOk);
    r = cli_run({"bogus"});
    CHECK(r.code == cli::kInput);
}
