#include "cli/commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <chrono>
#include <iostream>
#include <sstream>
#include <thread>

#include "cli/expected_tables.hpp"
#include "tribracket/builtins.hpp"
#include "tribracket/errors.hpp"
#include "tribracket/io.hpp"

namespace tribracket::cli {

namespace {

unsigned default_workers() { return std::max(1u, std::thread::hardware_concurrency()); }

std::string bracket_label(const std::string& arg) {
    for (const auto& n : builtin_bracket_names())
        if (arg == n) return n;
    return arg;
}

PDCode diagram_input(const std::string& arg, int& components, std::uint64_t& mask, std::string& label) {
    const Catalog& cat = Catalog::builtin();
    if (cat.contains(arg)) {
        const auto& e = cat.get(arg);
        components = e.components;
        mask = e.orientation;
        label = e.name;
        return e.pd;
    }
    bool pd_like = arg.find('(') != std::string::npos || arg.find('[') != std::string::npos ||
                   arg.find('{') != std::string::npos;
    if (!pd_like) cat.get(arg);
    PDCode pd = parse_pd(arg);
    components = build_diagram(pd).components;
    mask = 0;
    label = "";
    return pd;
}

nlohmann::json bracket_summary(const Bracket& br) {
    return {{"modulus", br.ring().modulus()}, {"delta", br.delta()}, {"w", br.w()}, {"size", br.tribracket().size()}};
}

class Timer {
public:
    explicit Timer(std::ostream& err) : err_(err), start_(std::chrono::steady_clock::now()) {}
    ~Timer() {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_);
        err_ << "time: " << ms.count() << " ms\n";
    }

private:
    std::ostream& err_;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace

std::vector<OrientedPhi> phi_all_orientations(const PDCode& pd, int components, const Bracket& br) {
    if (components > 16) throw BoundExceeded("too many components for an orientation search");
    std::vector<OrientedPhi> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << components); ++mask) {
        LinkDiagram d = build_diagram(pd, mask);
        InvariantPolynomial p = phi(d, br);
        out.push_back({mask, p.total(), p});
    }
    return out;
}

std::vector<TableRow> compute_table(const Bracket& br, const std::string& bracket_name, const std::string& corpus,
                                    unsigned workers) {
    const Catalog& cat = Catalog::builtin();
    std::vector<const CatalogEntry*> entries;
    auto add = [&](const char* tag) {
        auto l = cat.list({tag});
        entries.insert(entries.end(), l.begin(), l.end());
    };
    if (corpus == "knots8") {
        add("knot");
    } else if (corpus == "links7") {
        add("link");
    } else if (corpus == "composite") {
        add("composite");
        add("torus");
    } else if (corpus == "all") {
        add("knot");
        add("link");
        add("composite");
        add("torus");
    } else {
        throw ParseError("unknown corpus '" + corpus + "' (expected knots8, links7, composite or all)");
    }

    std::vector<ExpectedRow> expected = expected_table(bracket_name);
    std::vector<TableRow> rows(entries.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < entries.size();) {
            const CatalogEntry& e = *entries[i];
            TableRow& row = rows[i];
            row.name = e.name;
            row.crossings = e.crossings();
            row.components = e.components;
            row.by_orientation = phi_all_orientations(e.pd, e.components, br);
            const OrientedPhi* shown = &row.by_orientation.front();
            for (const auto& o : row.by_orientation)
                if (o.mask == e.orientation) shown = &o;
            row.match = "unlisted";
            for (const auto& ex : expected) {
                if (ex.name != e.name) continue;
                row.expected = ex.printed;
                row.erratum = ex.erratum;
                InvariantPolynomial want = InvariantPolynomial::parse(ex.normalized, br.ring().modulus());
                row.match = "mismatch";
                for (const auto& o : row.by_orientation)
                    if (o.phi == want) {
                        row.match = "match";
                        shown = &o;
                        break;
                    }
            }
            row.coloring_count = shown->colorings;
            row.phi = shown->phi.str();
            row.orientation_mask = shown->mask;
        }
    };
    unsigned w = std::max(1u, workers);
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < w; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    return rows;
}

std::string table_csv(const std::vector<TableRow>& rows) {
    std::ostringstream os;
    os << "name,crossings,components,coloring_count,phi,orientation_mask,match\n";
    for (const auto& r : rows)
        os << r.name << ',' << r.crossings << ',' << r.components << ',' << r.coloring_count << ',' << r.phi << ','
           << r.orientation_mask << ',' << r.match << '\n';
    return os.str();
}

namespace {

int cmd_verify_tribracket(const std::string& file, std::ostream& out) {
    Tribracket t = load_tribracket(file);
    AxiomReport rep = verify_tribracket(t);
    nlohmann::json j = {{"command", "verify-tribracket"}, {"input", file}, {"n", t.size()}, {"report", to_json(rep)}};
    out << j.dump(2) << '\n' << t.str();
    return rep.valid ? kOk : kCheckFailed;
}

int cmd_verify_bracket(const std::string& file, bool printed, std::ostream& out) {
    BracketSpec spec = load_bracket(file);
    require_units(spec);
    if (!verify_tribracket(spec.X, 1).valid) throw NotQuasigroup("the bracket's tribracket fails its axioms");
    BracketAxiomReport rep = verify_bracket(spec, printed ? SkeinVariant::printed : SkeinVariant::corrected);
    nlohmann::json j = {{"command", "verify-bracket"},
                        {"input", file},
                        {"variant", printed ? "printed" : "corrected"},
                        {"modulus", spec.modulus},
                        {"report", to_json(rep)}};
    out << j.dump(2) << '\n';
    out << "A =\n" << matrices_str(spec.A, spec.X.size()) << "B =\n" << matrices_str(spec.B, spec.X.size());
    return rep.valid ? kOk : kCheckFailed;
}

int cmd_search(const std::string& file, std::int64_t m, std::size_t limit, unsigned workers, int bound, bool oracle,
               std::ostream& out) {
    Tribracket t = load_tribracket(file);
    SearchOptions opts;
    opts.limit = limit;
    opts.workers = workers;
    opts.bound = bound;
    opts.prune = !oracle;
    for (const auto& b : search_brackets(t, m, opts)) {
        nlohmann::json j = to_json(b.spec());
        j["delta"] = b.delta();
        j["w"] = b.w();
        out << j.dump() << '\n';
    }
    return kOk;
}

int cmd_invariant(const std::string& diagram, const std::string& bracket, const std::string& tribracket_file,
                  const std::string& orientation, bool all_orientations, bool list, std::ostream& out) {
    int components = 0;
    std::uint64_t mask = 0;
    std::string label;
    PDCode pd = diagram_input(diagram, components, mask, label);
    if (!orientation.empty()) {
        try {
            std::size_t used = 0;
            mask = std::stoull(orientation, &used, 0);
            if (used != orientation.size()) throw std::invalid_argument(orientation);
        } catch (const std::exception&) {
            throw ParseError("orientation mask must be an integer");
        }
    }
    LinkDiagram d = build_diagram(pd, mask);
    nlohmann::json j = {{"command", "invariant"},
                        {"diagram", label.empty() ? pd_string(pd) : label},
                        {"pd", pd_string(pd)},
                        {"components", d.components},
                        {"crossings", d.crossings()},
                        {"writhe", d.writhe()},
                        {"orientation_mask", mask}};
    if (bracket.empty()) {
        if (tribracket_file.empty()) throw ParseError("give --bracket or --tribracket");
        Tribracket t = load_tribracket(tribracket_file);
        if (!verify_tribracket(t, 1).valid) throw NotQuasigroup("input is not a tribracket");
        auto cols = enumerate_colorings(d, t);
        j["coloring_count"] = cols.size();
        if (list) j["colorings"] = cols;
        out << j.dump(2) << '\n';
        return kOk;
    }
    Bracket br = make_bracket(load_bracket(bracket));
    j["bracket"] = bracket_summary(br);
    auto cols = enumerate_colorings(d, br.tribracket());
    StateSum ss(d);
    InvariantPolynomial p(br.ring().modulus());
    nlohmann::json listing = nlohmann::json::array();
    for (const auto& c : cols) {
        std::int64_t b = ss.beta(br, c);
        p.add(b);
        if (list) listing.push_back({{"faces", c}, {"beta", b}});
    }
    j["coloring_count"] = cols.size();
    j["phi"] = p.str();
    j["phi_json"] = p.to_json();
    j["multiset"] = p.multiset();
    if (list) j["colorings"] = listing;
    if (all_orientations) {
        nlohmann::json all = nlohmann::json::array();
        for (const auto& o : phi_all_orientations(pd, d.components, br))
            all.push_back({{"orientation_mask", o.mask}, {"phi", o.phi.str()}});
        j["by_orientation"] = all;
    }
    out << j.dump(2) << '\n';
    return kOk;
}

int cmd_tables(const std::string& bracket, const std::string& corpus, unsigned workers, std::ostream& out) {
    Bracket br = make_bracket(load_bracket(bracket));
    std::string name = bracket_label(bracket);
    auto rows = compute_table(br, name, corpus, workers);
    out << table_csv(rows);
    int mismatches = 0, matches = 0;
    for (const auto& r : rows) {
        if (r.match == "mismatch") {
            ++mismatches;
            out << "# mismatch " << r.name << ": expected " << r.expected << ", computed";
            for (const auto& o : r.by_orientation) out << " [" << o.mask << "] " << o.phi.str();
            out << '\n';
        } else if (r.match == "match") {
            ++matches;
        }
        if (!r.erratum.empty()) out << "# erratum " << r.name << ": " << r.erratum << " (" << r.match << ")\n";
    }
    out << "# rows " << rows.size() << ", matched " << matches << ", mismatched " << mismatches << '\n';
    return mismatches ? kCheckFailed : kOk;
}

int cmd_enumerate(int n, int bound, unsigned workers, std::ostream& out) {
    EnumerationOptions opts;
    opts.bound = bound;
    opts.workers = workers;
    auto all = enumerate_tribrackets(n, opts);
    for (const auto& t : all) out << to_json(t).dump() << '\n';
    out << "# " << all.size() << " tribrackets of size " << n << '\n';
    return kOk;
}

int cmd_catalog(const std::string& tag, std::ostream& out) {
    CatalogFilter f;
    f.tag = tag;
    for (const auto* e : Catalog::builtin().list(f)) {
        out << e->name << '\t' << e->crossings() << '\t' << e->components << '\t';
        for (std::size_t i = 0; i < e->tags.size(); ++i) out << (i ? " " : "") << e->tags[i];
        out << '\t' << e->pd_text << '\n';
    }
    return kOk;
}

int cmd_diagram(const std::string& diagram, std::uint64_t mask, std::ostream& out) {
    int components = 0;
    std::uint64_t default_mask = 0;
    std::string label;
    PDCode pd = diagram_input(diagram, components, default_mask, label);
    out << to_json(build_diagram(pd, mask)).dump(2) << '\n';
    return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Tribrackets, tribracket brackets and their link invariants"};
    app.require_subcommand(1);

    std::string file, bracket, tribracket_file, diagram, corpus = "all", orientation, tag;
    std::int64_t modulus = 0;
    std::size_t limit = 0;
    unsigned workers = default_workers();
    int bound = -1, size = 0;
    bool printed = false, oracle = false, list = false, all_orientations = false;
    std::uint64_t mask = 0;

    auto* vt = app.add_subcommand("verify-tribracket", "Check the tribracket axioms of a tensor");
    vt->add_option("file", file, "JSON file or built-in name (ex1, ex2, ex2b, trivial)")->required();

    auto* vb = app.add_subcommand("verify-bracket", "Check the bracket axioms and derive delta and w");
    vb->add_option("file", file, "JSON file or built-in name (z7, beta1, beta2, beta2-printed)")->required();
    vb->add_flag("--printed", printed, "Use the five-term form of the fourth skein equation");

    auto* sb = app.add_subcommand("search-brackets", "Find all brackets on a tribracket over Z_m");
    sb->add_option("file", file, "Tribracket JSON file or built-in name")->required();
    sb->add_option("-m,--modulus", modulus, "Coefficient modulus")->required();
    sb->add_option("--limit", limit, "Emit at most this many brackets (0: all)");
    sb->add_option("--workers", workers, "Worker threads");
    sb->add_option("--bound", bound, "Largest tribracket size searched without a warning");
    sb->add_flag("--oracle", oracle, "Unpruned search verifying every assignment");

    auto* iv = app.add_subcommand("invariant", "Coloring count and bracket polynomial of a diagram");
    iv->add_option("-d,--diagram", diagram, "Catalog name or PD code")->required();
    iv->add_option("-b,--bracket", bracket, "Bracket JSON file or built-in name");
    iv->add_option("-t,--tribracket", tribracket_file, "Tribracket for a coloring count without a bracket");
    iv->add_option("--orientations", orientation, "Component reversal mask");
    iv->add_flag("--all-orientations", all_orientations, "Also list the polynomial for every mask");
    iv->add_flag("--list", list, "List every coloring");

    auto* tb = app.add_subcommand("tables", "Compute the invariant over a corpus and compare with the tables");
    tb->add_option("-b,--bracket", bracket, "beta1, beta2 or a bracket file")->required();
    tb->add_option("-c,--corpus", corpus, "knots8, links7, composite or all");
    tb->add_option("--workers", workers, "Worker threads");

    auto* en = app.add_subcommand("enumerate", "List every tribracket of a given size");
    en->add_option("-n,--size", size, "Number of elements")->required();
    en->add_option("--bound", bound, "Largest size enumerated without a warning");
    en->add_option("--workers", workers, "Worker threads");

    auto* ct = app.add_subcommand("catalog", "List catalog diagrams");
    ct->add_option("--tag", tag, "knot, link, composite, torus or fixture");

    auto* dg = app.add_subcommand("diagram", "Dump faces, signs and region roles as JSON");
    dg->add_option("-d,--diagram", diagram, "Catalog name or PD code")->required();
    dg->add_option("--orientations", mask, "Component reversal mask");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInput;
    }

    try {
        Timer timer(err);
        if (*vt) return cmd_verify_tribracket(file, out);
        if (*vb) return cmd_verify_bracket(file, printed, out);
        if (*sb) return cmd_search(file, modulus, limit, workers, bound < 0 ? 2 : bound, oracle, out);
        if (*iv) return cmd_invariant(diagram, bracket, tribracket_file, orientation, all_orientations, list, out);
        if (*tb) return cmd_tables(bracket, corpus, workers, out);
        if (*en) return cmd_enumerate(size, bound < 0 ? 3 : bound, workers, out);
        if (*ct) return cmd_catalog(tag, out);
        if (*dg) return cmd_diagram(diagram, mask, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.exit_code();
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kInput;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    }
    return kInternal;
}

}  // namespace tribracket::cli
