#include "tribracket/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "tribracket/builtins.hpp"
#include "tribracket/errors.hpp"

namespace tribracket {

namespace {

template <class T>
std::vector<T> flatten(const nlohmann::json& j, int& n, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be a list of matrices");
    n = static_cast<int>(j.size());
    std::vector<T> out;
    for (const auto& m : j) {
        if (!m.is_array() || static_cast<int>(m.size()) != n)
            throw ParseError(std::string(what) + " is not n x n x n");
        for (const auto& row : m) {
            if (!row.is_array() || static_cast<int>(row.size()) != n)
                throw ParseError(std::string(what) + " is not n x n x n");
            for (const auto& v : row) {
                if (!v.is_number_integer()) throw ParseError(std::string(what) + " entries must be integers");
                out.push_back(v.get<T>());
            }
        }
    }
    return out;
}

template <class T>
nlohmann::json nest(const std::vector<T>& flat, int n) {
    nlohmann::json out = nlohmann::json::array();
    for (int a = 0; a < n; ++a) {
        nlohmann::json m = nlohmann::json::array();
        for (int b = 0; b < n; ++b) {
            nlohmann::json row = nlohmann::json::array();
            for (int c = 0; c < n; ++c) row.push_back(flat[(static_cast<std::size_t>(a) * n + b) * n + c]);
            m.push_back(row);
        }
        out.push_back(m);
    }
    return out;
}

nlohmann::json violations_json(const std::vector<Violation>& v) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& x : v) out.push_back({{"axiom", x.axiom}, {"witness", x.witness}});
    return out;
}

nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("'" + path + "' is not valid JSON: " + e.what());
    }
}

bool looks_like_path(const std::string& s) {
    return s.find('/') != std::string::npos || s.find('.') != std::string::npos || std::filesystem::exists(s);
}

}  // namespace

Tribracket tribracket_from_json(const nlohmann::json& j) {
    const nlohmann::json& t = j.is_object() ? j.at("tensor") : j;
    int n = 0;
    auto flat = flatten<int>(t, n, "tribracket tensor");
    if (j.is_object() && j.contains("n") && j.at("n").get<int>() != n)
        throw ParseError("declared size does not match the tensor");
    return Tribracket(n, std::move(flat));
}

nlohmann::json to_json(const Tribracket& t) { return {{"n", t.size()}, {"tensor", nest(t.flat(), t.size())}}; }

BracketSpec bracket_from_json(const nlohmann::json& j) {
    try {
        if (!j.is_object()) throw ParseError("bracket file must be a JSON object");
        Tribracket x = tribracket_from_json(j.at("tribracket"));
        std::int64_t m = j.at("modulus").get<std::int64_t>();
        int na = 0, nb = 0;
        auto A = flatten<std::int64_t>(j.at("A"), na, "A");
        auto B = flatten<std::int64_t>(j.at("B"), nb, "B");
        if (na != x.size() || nb != x.size()) throw ParseError("A and B must match the tribracket size");
        return {x, m, std::move(A), std::move(B)};
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed bracket: ") + e.what());
    }
}

nlohmann::json to_json(const BracketSpec& b) {
    return {{"tribracket", to_json(b.X)},
            {"modulus", b.modulus},
            {"A", nest(b.A, b.X.size())},
            {"B", nest(b.B, b.X.size())}};
}

nlohmann::json to_json(const AxiomReport& r) {
    return {{"valid", r.valid}, {"violations", violations_json(r.violations)}};
}

nlohmann::json to_json(const BracketAxiomReport& r) {
    nlohmann::json j = {{"valid", r.valid},
                        {"units_ok", r.units_ok},
                        {"delta_ok", r.delta_ok},
                        {"w_ok", r.w_ok},
                        {"delta", nullptr},
                        {"w", nullptr},
                        {"notes", r.notes},
                        {"skein_violations", violations_json(r.skein_violations)}};
    if (r.delta) j["delta"] = *r.delta;
    if (r.w) j["w"] = *r.w;
    return j;
}

nlohmann::json to_json(const LinkDiagram& d) {
    nlohmann::json crossings = nlohmann::json::array();
    for (int x = 0; x < d.crossings(); ++x)
        crossings.push_back({{"pd", d.pd.crossings[x]},
                             {"sign", d.signs[x]},
                             {"under_in", d.under_in[x]},
                             {"over_in", d.over_in[x]},
                             {"corner_faces", d.corner_face[x]},
                             {"roles", {{"a", d.roles[x][kA]}, {"b", d.roles[x][kB]}, {"c", d.roles[x][kC]},
                                        {"d", d.roles[x][kD]}}}});
    nlohmann::json faces = nlohmann::json::array();
    for (const auto& f : d.faces) {
        nlohmann::json corners = nlohmann::json::array();
        for (const auto& c : f) corners.push_back({c.crossing, c.slot});
        faces.push_back(corners);
    }
    return {{"pd", pd_string(d.pd)},
            {"components", d.components},
            {"positive", d.positive},
            {"negative", d.negative},
            {"writhe", d.writhe()},
            {"crossings", crossings},
            {"faces", faces}};
}

Tribracket load_tribracket(const std::string& s) {
    if (!looks_like_path(s)) return builtin_tribracket(s);
    nlohmann::json j = read_json_file(s);
    try {
        return tribracket_from_json(j);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("malformed tribracket file '" + s + "': " + e.what());
    }
}

BracketSpec load_bracket(const std::string& s) {
    if (!looks_like_path(s)) return builtin_bracket_spec(s);
    return bracket_from_json(read_json_file(s));
}

std::string matrices_str(const std::vector<std::int64_t>& flat, int n) {
    std::ostringstream os;
    for (int a = 0; a < n; ++a) {
        os << '[';
        for (int b = 0; b < n; ++b) {
            os << (b ? " [" : "[");
            for (int c = 0; c < n; ++c) os << (c ? " " : "") << flat[(static_cast<std::size_t>(a) * n + b) * n + c];
            os << ']';
        }
        os << "]\n";
    }
    return os.str();
}

}  // namespace tribracket
