#include "tribracket/builtins.hpp"

#include "tribracket/errors.hpp"

namespace tribracket {

namespace {

std::vector<std::int64_t> flat64(const Nested3& t) {
    std::vector<std::int64_t> out;
    for (const auto& m : t)
        for (const auto& row : m) out.insert(out.end(), row.begin(), row.end());
    return out;
}

}  // namespace

Tribracket builtin_tribracket(const std::string& name) {
    if (name == "ex1")
        return Tribracket::from_nested({{{1, 3, 2}, {2, 1, 3}, {3, 2, 1}},
                                        {{2, 1, 3}, {3, 2, 1}, {1, 3, 2}},
                                        {{3, 2, 1}, {1, 3, 2}, {2, 1, 3}}});
    if (name == "ex2") return Tribracket::from_nested({{{2, 1}, {1, 2}}, {{1, 2}, {2, 1}}});
    if (name == "ex2b") return Tribracket::from_nested({{{1, 2}, {2, 1}}, {{2, 1}, {1, 2}}});
    if (name == "trivial") return Tribracket(1, {1});
    throw UnknownName("unknown tribracket '" + name + "'");
}

std::vector<std::string> builtin_tribracket_names() { return {"ex1", "ex2", "ex2b", "trivial"}; }

BracketSpec builtin_bracket_spec(const std::string& name) {
    Tribracket x = builtin_tribracket("ex2");
    if (name == "z7")
        return {x, 7, flat64({{{1, 3}, {2, 1}}, {{1, 2}, {3, 1}}}), flat64({{{5, 1}, {3, 5}}, {{5, 3}, {1, 5}}})};
    if (name == "beta1")
        return {x, 5, flat64({{{1, 4}, {2, 1}}, {{1, 1}, {3, 1}}}), flat64({{{4, 1}, {3, 4}}, {{4, 4}, {2, 4}}})};
    if (name == "beta2")
        return {x, 5, flat64({{{1, 2}, {2, 1}}, {{1, 3}, {3, 1}}}), flat64({{{4, 3}, {3, 4}}, {{4, 2}, {2, 4}}})};
    if (name == "beta2-printed")
        return {x, 5, flat64({{{1, 2}, {2, 1}}, {{1, 1}, {3, 1}}}), flat64({{{4, 3}, {3, 4}}, {{4, 2}, {2, 4}}})};
    throw UnknownName("unknown bracket '" + name + "'");
}

Bracket builtin_bracket(const std::string& name) { return make_bracket(builtin_bracket_spec(name)); }

std::vector<std::string> builtin_bracket_names() { return {"z7", "beta1", "beta2", "beta2-printed"}; }

}  // namespace tribracket
