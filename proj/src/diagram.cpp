#include "tribracket/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "tribracket/errors.hpp"

namespace tribracket {

namespace {

class DisjointSets {
public:
    explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    int find(int x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    bool unite(int x, int y) {
        x = find(x);
        y = find(y);
        if (x == y) return false;
        parent_[y] = x;
        return true;
    }

private:
    std::vector<int> parent_;
};

std::vector<long> read_ints(const std::string& body) {
    std::vector<long> out;
    std::string tok;
    auto flush = [&] {
        if (tok.empty()) return;
        try {
            std::size_t used = 0;
            out.push_back(std::stol(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw ParseError("bad integer '" + tok + "' in PD code");
        }
        tok.clear();
    };
    for (char ch : body) {
        if (ch == ',' || std::isspace(static_cast<unsigned char>(ch)))
            flush();
        else
            tok += ch;
    }
    flush();
    return out;
}

void add_crossing(PDCode& pd, const std::vector<long>& v) {
    if (v.size() != 4) throw ParseError("crossing has " + std::to_string(v.size()) + " labels, expected 4");
    std::array<int, 4> x{};
    for (int i = 0; i < 4; ++i) {
        if (v[i] < 1) throw ParseError("edge labels must be positive");
        x[i] = static_cast<int>(v[i]);
    }
    pd.crossings.push_back(x);
}

void parse_nested(const std::string& text, PDCode& pd) {
    std::string s = text;
    std::replace(s.begin(), s.end(), '{', '[');
    std::replace(s.begin(), s.end(), '}', ']');
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(s);
    } catch (const std::exception&) {
        throw ParseError("malformed PD list");
    }
    if (!j.is_array()) throw ParseError("PD list must be an array");
    for (const auto& t : j) {
        if (!t.is_array()) throw ParseError("PD list entries must be quadruples");
        std::vector<long> v;
        for (const auto& e : t) {
            if (!e.is_number_integer()) throw ParseError("PD labels must be integers");
            v.push_back(e.get<long>());
        }
        add_crossing(pd, v);
    }
}

void validate(const PDCode& pd) {
    std::map<int, int> count;
    for (const auto& x : pd.crossings)
        for (int e : x) ++count[e];
    for (auto [e, k] : count)
        if (k != 2)
            throw ParseError("edge " + std::to_string(e) + " appears " + std::to_string(k) + " times, expected 2");
    if (pd.crossings.empty() && pd.free_loops == 0)
        throw ParseError("empty diagram; use U(k) for k crossingless circles");
}

}  // namespace

PDCode parse_pd(const std::string& text) {
    PDCode pd;
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (text[first] == '[' || text[first] == '{')) {
        parse_nested(text.substr(first), pd);
        validate(pd);
        return pd;
    }
    std::size_t i = 0;
    int wrappers = 0;
    while (i < text.size()) {
        char ch = text[i];
        if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
            ++i;
            continue;
        }
        if (text.compare(i, 3, "PD[") == 0 || text.compare(i, 3, "PD(") == 0) {
            i += 3;
            ++wrappers;
            continue;
        }
        if ((ch == ']' || ch == ')') && wrappers > 0) {
            --wrappers;
            ++i;
            continue;
        }
        if ((ch == 'X' || ch == 'U') && i + 1 < text.size() && (text[i + 1] == '(' || text[i + 1] == '[')) {
            char close = text[i + 1] == '(' ? ')' : ']';
            std::size_t end = text.find(close, i + 2);
            if (end == std::string::npos) throw ParseError("unterminated " + std::string(1, ch) + " term");
            auto v = read_ints(text.substr(i + 2, end - i - 2));
            if (ch == 'X') {
                add_crossing(pd, v);
            } else {
                if (v.size() != 1 || v[0] < 1) throw ParseError("U(k) needs one positive count");
                pd.free_loops += static_cast<int>(v[0]);
            }
            i = end + 1;
            continue;
        }
        throw ParseError("unexpected character '" + std::string(1, ch) + "' in PD code");
    }
    if (wrappers) throw ParseError("unterminated PD[...] wrapper");
    validate(pd);
    return pd;
}

std::string pd_string(const PDCode& pd) {
    std::ostringstream os;
    for (std::size_t i = 0; i < pd.crossings.size(); ++i) {
        const auto& x = pd.crossings[i];
        os << (i ? " " : "") << "X(" << x[0] << ',' << x[1] << ',' << x[2] << ',' << x[3] << ')';
    }
    if (pd.free_loops) os << (pd.crossings.empty() ? "" : " ") << "U(" << pd.free_loops << ')';
    return os.str();
}

PDCode mirror(const PDCode& pd) {
    PDCode out = pd;
    for (auto& x : out.crossings) std::swap(x[1], x[3]);
    return out;
}

LinkDiagram build_diagram(const PDCode& pd, std::uint64_t flip_mask) {
    validate(pd);
    LinkDiagram d;
    d.pd = pd;
    const int c = static_cast<int>(pd.crossings.size());
    const int ends = 4 * c;
    auto label = [&](int end) { return pd.crossings[end / 4][end % 4]; };
    auto through = [](int end) { return end / 4 * 4 + (end % 4 + 2) % 4; };

    // Other end of the edge at each slot.
    std::vector<int> partner(ends, -1);
    {
        std::map<int, int> seen;
        for (int e = 0; e < ends; ++e) {
            auto it = seen.find(label(e));
            if (it == seen.end()) {
                seen[label(e)] = e;
            } else {
                partner[e] = it->second;
                partner[it->second] = e;
            }
        }
    }

    // Components are orbits of alternately crossing through and following an edge.
    std::vector<int> comp_of(ends, -1);
    std::vector<std::vector<int>> comp_ends;
    for (int s = 0; s < ends; ++s) {
        if (comp_of[s] >= 0) continue;
        int id = static_cast<int>(comp_ends.size());
        comp_ends.emplace_back();
        int e = s;
        do {
            comp_of[e] = id;
            comp_of[through(e)] = id;
            comp_ends.back().push_back(e);
            comp_ends.back().push_back(through(e));
            e = partner[through(e)];
        } while (e != s);
    }
    const int k = static_cast<int>(comp_ends.size());
    std::vector<int> min_label(k);
    for (int i = 0; i < k; ++i) {
        min_label[i] = label(comp_ends[i][0]);
        for (int e : comp_ends[i]) min_label[i] = std::min(min_label[i], label(e));
    }
    std::vector<int> rank(k);
    std::iota(rank.begin(), rank.end(), 0);
    std::sort(rank.begin(), rank.end(), [&](int x, int y) { return min_label[x] < min_label[y]; });
    std::vector<int> comp_index(k);
    for (int i = 0; i < k; ++i) comp_index[rank[i]] = i;

    // incoming[e]: the strand enters its crossing at slot e.
    std::vector<char> incoming(ends, 0);
    for (int i = 0; i < k; ++i) {
        const auto& ce = comp_ends[i];
        int seed = -1;
        bool seed_in = true;
        for (int e : ce)
            if (e % 2 == 0) {
                seed = e;
                seed_in = e % 4 == 0;
                break;
            }
        if (seed < 0) {
            // Over-only component: follow ascending labels from the smallest one.
            int lo = -1;
            for (int e : ce)
                if (label(e) == min_label[i] && (lo < 0 || e < lo)) lo = e;
            int before = label(through(partner[lo]));
            int after = label(through(lo));
            seed = lo;
            seed_in = after <= before;
        }
        int e = seed;
        bool in = seed_in;
        do {
            incoming[e] = in;
            incoming[through(e)] = !in;
            e = partner[through(e)];
        } while (e != seed);
        for (int x : ce)
            if (x % 2 == 0 && incoming[x] != (x % 4 == 0))
                throw ParseError("inconsistent orientation: crossing " + std::to_string(x / 4 + 1) +
                                 " has its under-strand entering at slot 3 of the tuple");
    }
    for (int i = 0; i < k; ++i)
        if (flip_mask >> comp_index[i] & 1u)
            for (int e : comp_ends[i]) incoming[e] = !incoming[e];
    for (int e = 0; e < ends; ++e)
        if (incoming[e] == incoming[partner[e]])
            throw ParseError("edge " + std::to_string(label(e)) + " has no consistent direction");

    d.partner = partner;
    d.components = k + pd.free_loops;
    d.slot_component.assign(c, {});
    d.under_in.assign(c, 0);
    d.over_in.assign(c, 1);
    d.signs.assign(c, 0);
    for (int x = 0; x < c; ++x) {
        for (int s = 0; s < 4; ++s) d.slot_component[x][s] = comp_index[comp_of[4 * x + s]];
        d.under_in[x] = incoming[4 * x] ? 0 : 2;
        d.over_in[x] = incoming[4 * x + 1] ? 1 : 3;
        d.signs[x] = d.over_in[x] == (d.under_in[x] + 3) % 4 ? 1 : -1;
        (d.signs[x] > 0 ? d.positive : d.negative) += 1;
    }

    // Faces: the corner after slot p continues at the far end of the edge at slot p+1.
    std::vector<int> face_of(ends, -1);
    std::vector<std::vector<int>> orbits;
    for (int s = 0; s < ends; ++s) {
        if (face_of[s] >= 0) continue;
        int id = static_cast<int>(orbits.size());
        orbits.emplace_back();
        int e = s;
        do {
            face_of[e] = id;
            orbits.back().push_back(e);
            e = partner[e / 4 * 4 + (e % 4 + 1) % 4];
        } while (e != s);
    }

    // Connected pieces of the crossing graph; each must satisfy Euler's formula.
    DisjointSets piece(std::max(c, 1));
    for (int e = 0; e < ends; ++e) piece.unite(e / 4, partner[e] / 4);
    std::map<int, std::pair<int, int>> piece_stats;
    for (int x = 0; x < c; ++x) ++piece_stats[piece.find(x)].first;
    for (const auto& o : orbits) ++piece_stats[piece.find(o[0] / 4)].second;
    for (auto [root, st] : piece_stats)
        if (st.second != st.first + 2)
            throw ParseError("non-planar PD code: a piece with " + std::to_string(st.first) + " crossings has " +
                             std::to_string(st.second) + " faces, expected " + std::to_string(st.first + 2));

    // Split pieces share one outer region: the face at slot 0 of the first crossing of each piece.
    std::vector<int> merged(orbits.size());
    std::iota(merged.begin(), merged.end(), 0);
    {
        std::map<int, int> outer;
        for (int x = 0; x < c; ++x) {
            int r = piece.find(x);
            if (!outer.count(r)) outer[r] = face_of[4 * x];
        }
        int root_face = outer.empty() ? -1 : outer.begin()->second;
        for (auto [r, f] : outer) merged[f] = root_face;
    }
    std::vector<int> renum(orbits.size(), -1);
    for (int e = 0; e < ends; ++e) {
        int f = merged[face_of[e]];
        if (renum[f] < 0) {
            renum[f] = static_cast<int>(d.faces.size());
            d.faces.emplace_back();
        }
        d.faces[renum[f]].push_back({e / 4, e % 4});
    }
    if (c == 0) d.faces.emplace_back();
    for (int i = 0; i < pd.free_loops; ++i) d.faces.emplace_back();

    d.corner_face.assign(c, {});
    d.roles.assign(c, {});
    for (int x = 0; x < c; ++x) {
        for (int s = 0; s < 4; ++s) d.corner_face[x][s] = renum[merged[face_of[4 * x + s]]];
        auto corner = [&](int k) { return d.corner_face[x][(d.under_in[x] + k) % 4]; };
        if (d.signs[x] > 0)
            d.roles[x] = {corner(2), corner(3), corner(1), corner(0)};
        else
            d.roles[x] = {corner(3), corner(2), corner(0), corner(1)};
    }
    return d;
}

int smooth(const LinkDiagram& d, std::uint64_t choices) {
    const int c = d.crossings();
    if (c == 0) return d.pd.free_loops;
    DisjointSets ds(4 * c);
    int classes = 4 * c;
    for (int e = 0; e < 4 * c; ++e) classes -= ds.unite(e, d.partner[e]);
    for (int x = 0; x < c; ++x) {
        int ui = 4 * x + d.under_in[x], uo = 4 * x + (d.under_in[x] + 2) % 4;
        int oi = 4 * x + d.over_in[x], oo = 4 * x + (d.over_in[x] + 2) % 4;
        if (choices >> x & 1u) {
            classes -= ds.unite(ui, oi);
            classes -= ds.unite(uo, oo);
        } else {
            classes -= ds.unite(ui, oo);
            classes -= ds.unite(oi, uo);
        }
    }
    return classes + d.pd.free_loops;
}

std::vector<SmoothingState> enumerate_states(const LinkDiagram& d) {
    const int c = d.crossings();
    if (c > kMaxStateCrossings)
        throw BoundExceeded("state sum over " + std::to_string(c) + " crossings exceeds the limit of " +
                            std::to_string(kMaxStateCrossings));
    std::vector<SmoothingState> out;
    out.reserve(std::size_t{1} << c);
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << c); ++s) out.push_back({s, smooth(d, s)});
    return out;
}

}  // namespace tribracket
