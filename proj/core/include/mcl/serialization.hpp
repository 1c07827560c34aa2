#pragma once

#include <string>

#include <json.hpp>

#include "mcl/groups.hpp"
#include "mcl/lattice.hpp"
#include "mcl/matrix.hpp"

namespace mcl {

// Lattice elements: {"modulus": n, "entries": ["X" | 1..2k, ...]} with the
// {"modulus": n, "bottom": true} variant for the adjoined bottom.
nlohmann::json to_json(const MclElement& m);
MclElement element_from_json(const nlohmann::json& j);

// Permutations are bare image arrays; wreath elements
// {"base": [[...], ...], "top": [...]}.
nlohmann::json to_json(const Perm& p);
Perm perm_from_json(const nlohmann::json& j);
nlohmann::json to_json(const WreathElement& w);
WreathElement wreath_from_json(const nlohmann::json& j);

// Matrices: {"rows": r, "cols": c, "data": [[[re, im], ...], ...]}, reals
// printed with 17 significant digits so the encoding round-trips bit-exactly.
std::string matrix_to_json_string(const CMatrix& m);
CMatrix matrix_from_json(const nlohmann::json& j);

}  // namespace mcl
