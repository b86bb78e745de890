#pragma once

#include <json.hpp>

#include "simpend/frieze.hpp"
#include "simpend/ordmap.hpp"
#include "simpend/temperleylieb.hpp"

namespace simpend {

// JSON forms used by the CLI:
//
//   OrdMap    {"n": 3, "m": 2, "values": [0, 0, 1]}
//   OrdEndoN  {"prefix": [0, 0], "type": [2, 1]}
//   Frieze    {"cups": [[2, 3]], "caps": [[-4, -3]], "type": [4, 4]}
//   TLDiagram {"n": 2, "pairs": [[["b", 1], ["b", 2]], ...], "circles": 0}
//
// Readers pass every value through the validating constructor of its type,
// so structural junk surfaces as nlohmann exceptions and semantic junk as
// ValidationError.

nlohmann::json to_json(const OrdMap& f);
nlohmann::json to_json(const OrdEndoN& f);
nlohmann::json to_json(const Frieze& d);
nlohmann::json to_json(const TLDiagram& d);

OrdMap ordmap_from_json(const nlohmann::json& j);
OrdEndoN endo_from_json(const nlohmann::json& j);
Frieze frieze_from_json(const nlohmann::json& j);
TLDiagram tl_from_json(const nlohmann::json& j);

}  // namespace simpend
