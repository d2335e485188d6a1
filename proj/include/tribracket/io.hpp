#pragma once

#include <string>

#include <json.hpp>

#include "tribracket/bracket.hpp"
#include "tribracket/diagram.hpp"
#include "tribracket/tribracket.hpp"

namespace tribracket {

// {"n": 3, "tensor": [[[...]]]}; a bare nested tensor is accepted as well.
Tribracket tribracket_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Tribracket& t);

// {"tribracket": <tribracket>, "modulus": m, "A": [[[...]]], "B": [[[...]]]}
BracketSpec bracket_from_json(const nlohmann::json& j);
nlohmann::json to_json(const BracketSpec& b);

nlohmann::json to_json(const AxiomReport& r);
nlohmann::json to_json(const BracketAxiomReport& r);
// Signs, faces and roles with stable ordering.
nlohmann::json to_json(const LinkDiagram& d);

// A built-in name or a path to a JSON file; throws ParseError or UnknownName.
Tribracket load_tribracket(const std::string& name_or_path);
BracketSpec load_bracket(const std::string& name_or_path);

// Coefficient tensor as a list of matrices, one matrix per line.
std::string matrices_str(const std::vector<std::int64_t>& flat, int n);

}  // namespace tribracket
