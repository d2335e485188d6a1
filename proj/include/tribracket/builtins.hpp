#pragma once

#include <string>
#include <vector>

#include "tribracket/bracket.hpp"
#include "tribracket/tribracket.hpp"

namespace tribracket {

// ex1: 3-element tribracket [a,b,c] = a + b - c (mod 3).
// ex2: 2-element tribracket [a,b,c] = a + b + c + 1 (mod 2).
// ex2b: the other 2-element tribracket, a + b + c (mod 2).
Tribracket builtin_tribracket(const std::string& name);
std::vector<std::string> builtin_tribracket_names();

// z7: Z_7 bracket on ex2 (delta 6, w 4).
// beta1, beta2: Z_5 brackets on ex2; beta2 carries A(2,1,2) = 3.
// beta2-printed: beta2 with A(2,1,2) = 1, which is not a bracket.
BracketSpec builtin_bracket_spec(const std::string& name);
Bracket builtin_bracket(const std::string& name);
std::vector<std::string> builtin_bracket_names();

}  // namespace tribracket
