#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tribracket/diagram.hpp"

namespace tribracket {

struct CatalogEntry {
    std::string name;
    std::string pd_text;
    PDCode pd;
    int components = 1;
    std::vector<std::string> tags;
    std::string source;
    // Fixtures sharing a group are diagrams of the same oriented link.
    std::string group;
    // Bit i reverses component i relative to the PD labels.
    std::uint64_t orientation = 0;

    int crossings() const { return static_cast<int>(pd.crossings.size()); }
    bool has_tag(const std::string& tag) const;
};

struct CatalogFilter {
    std::string tag;
    int min_crossings = -1;
    int max_crossings = -1;
};

class Catalog {
public:
    // Each pair is (file name, file contents) in the asset format.
    static Catalog from_assets(const std::vector<std::pair<std::string, std::string>>& files);
    static Catalog load_directory(const std::string& dir);
    // Embedded assets, or the directory named by TRIBRACKET_CATALOG.
    static const Catalog& builtin();

    bool contains(const std::string& name) const { return entries_.count(name) > 0; }
    // Throws UnknownName with the closest known name.
    const CatalogEntry& get(const std::string& name) const;
    // Natural name order, so 8_9 precedes 8_10.
    std::vector<const CatalogEntry*> list(const CatalogFilter& filter = {}) const;
    std::size_t size() const { return entries_.size(); }

private:
    std::map<std::string, CatalogEntry> entries_;
};

// Name comparison treating digit runs as numbers.
bool natural_less(const std::string& x, const std::string& y);

CatalogEntry parse_catalog_entry(const std::string& file, const std::string& text);

}  // namespace tribracket
