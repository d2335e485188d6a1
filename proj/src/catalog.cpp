#include "tribracket/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "tribracket/errors.hpp"

namespace tribracket {

namespace detail {
extern const std::vector<std::pair<std::string, std::string>> kEmbeddedCatalog;
}

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::size_t edit_distance(const std::string& x, const std::string& y) {
    std::vector<std::size_t> prev(y.size() + 1), cur(y.size() + 1);
    for (std::size_t j = 0; j <= y.size(); ++j) prev[j] = j;
    for (std::size_t i = 1; i <= x.size(); ++i) {
        cur[0] = i;
        for (std::size_t j = 1; j <= y.size(); ++j)
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (x[i - 1] != y[j - 1])});
        std::swap(prev, cur);
    }
    return prev[y.size()];
}

}  // namespace

bool CatalogEntry::has_tag(const std::string& tag) const {
    return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

bool natural_less(const std::string& x, const std::string& y) {
    std::size_t i = 0, j = 0;
    while (i < x.size() && j < y.size()) {
        bool dx = std::isdigit(static_cast<unsigned char>(x[i]));
        bool dy = std::isdigit(static_cast<unsigned char>(y[j]));
        if (dx && dy) {
            std::size_t i2 = i, j2 = j;
            while (i2 < x.size() && std::isdigit(static_cast<unsigned char>(x[i2]))) ++i2;
            while (j2 < y.size() && std::isdigit(static_cast<unsigned char>(y[j2]))) ++j2;
            unsigned long long a = std::stoull(x.substr(i, i2 - i)), b = std::stoull(y.substr(j, j2 - j));
            if (a != b) return a < b;
            i = i2;
            j = j2;
        } else {
            if (x[i] != y[j]) return x[i] < y[j];
            ++i;
            ++j;
        }
    }
    return x.size() - i < y.size() - j;
}

CatalogEntry parse_catalog_entry(const std::string& file, const std::string& text) {
    CatalogEntry e;
    bool have_components = false;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) throw ParseError(file + ": expected 'key: value', got '" + line + "'");
        std::string key = trim(line.substr(0, colon)), value = trim(line.substr(colon + 1));
        if (key == "name") {
            e.name = value;
        } else if (key == "pd") {
            e.pd_text = value;
        } else if (key == "components") {
            e.components = std::atoi(value.c_str());
            have_components = true;
        } else if (key == "tags") {
            std::istringstream ts(value);
            for (std::string t; ts >> t;) e.tags.push_back(t);
        } else if (key == "source") {
            e.source = value;
        } else if (key == "group") {
            e.group = value;
        } else if (key == "orientation") {
            std::istringstream os(value);
            int bit = 0;
            for (std::string t; os >> t; ++bit)
                if (t == "1" || t == "-") e.orientation |= std::uint64_t{1} << bit;
        } else {
            throw ParseError(file + ": unknown key '" + key + "'");
        }
    }
    if (e.name.empty() || e.pd_text.empty() || !have_components)
        throw ParseError(file + ": name, pd and components are required");
    try {
        e.pd = parse_pd(e.pd_text);
        LinkDiagram d = build_diagram(e.pd, e.orientation);
        if (d.components != e.components)
            throw ParseError("declares " + std::to_string(e.components) + " components, PD has " +
                             std::to_string(d.components));
    } catch (const ParseError& err) {
        throw ParseError(file + ": " + err.what());
    }
    return e;
}

Catalog Catalog::from_assets(const std::vector<std::pair<std::string, std::string>>& files) {
    Catalog cat;
    for (const auto& [file, text] : files) {
        CatalogEntry e = parse_catalog_entry(file, text);
        if (cat.entries_.count(e.name)) throw ParseError(file + ": duplicate catalog name '" + e.name + "'");
        std::string name = e.name;
        cat.entries_.emplace(name, std::move(e));
    }
    return cat;
}

Catalog Catalog::load_directory(const std::string& dir) {
    namespace fs = std::filesystem;
    std::vector<std::pair<std::string, std::string>> files;
    std::error_code ec;
    fs::directory_iterator it(dir, ec);
    if (ec) throw ParseError("cannot read catalog directory '" + dir + "'");
    for (const auto& entry : it) {
        if (entry.path().extension() != ".txt") continue;
        std::ifstream in(entry.path());
        std::stringstream ss;
        ss << in.rdbuf();
        files.emplace_back(entry.path().filename().string(), ss.str());
    }
    std::sort(files.begin(), files.end());
    return from_assets(files);
}

const Catalog& Catalog::builtin() {
    static const Catalog cat = [] {
        const char* dir = std::getenv("TRIBRACKET_CATALOG");
        if (dir && *dir) return load_directory(dir);
        return from_assets(detail::kEmbeddedCatalog);
    }();
    return cat;
}

const CatalogEntry& Catalog::get(const std::string& name) const {
    auto it = entries_.find(name);
    if (it != entries_.end()) return it->second;
    std::string best;
    std::size_t best_d = SIZE_MAX;
    for (const auto& [n, e] : entries_) {
        std::size_t dist = edit_distance(name, n);
        if (dist < best_d) {
            best_d = dist;
            best = n;
        }
    }
    std::string msg = "unknown diagram '" + name + "'";
    if (!best.empty()) msg += "; did you mean '" + best + "'?";
    throw UnknownName(msg);
}

std::vector<const CatalogEntry*> Catalog::list(const CatalogFilter& f) const {
    std::vector<const CatalogEntry*> out;
    for (const auto& [n, e] : entries_) {
        if (!f.tag.empty() && !e.has_tag(f.tag)) continue;
        if (f.min_crossings >= 0 && e.crossings() < f.min_crossings) continue;
        if (f.max_crossings >= 0 && e.crossings() > f.max_crossings) continue;
        out.push_back(&e);
    }
    std::sort(out.begin(), out.end(), [](auto* x, auto* y) { return natural_less(x->name, y->name); });
    return out;
}

}  // namespace tribracket
