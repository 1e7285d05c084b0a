#pragma once

#include <json.hpp>

#include "lcsgc/core.hpp"

namespace lcsgc {

/// Reads an instance object:
///   {"v": string|int[], "w": string|int[], "variant": string, "sigma": int?,
///    "gaps": [[l,u],...]?, "left": {letter: [l,u]}?, "right": {...}?, "B": int?}
/// String words share one alphabet numbered by first occurrence, and
/// left/right keys are then single characters; with integer words the keys
/// are decimal letters. Throws BadInput on malformed documents. The result
/// is not validated.
ProblemInstance instance_from_json(const nlohmann::json& doc);

/// Inverse of instance_from_json; words are written as text when the
/// instance carries an alphabet.
nlohmann::json instance_to_json(const ProblemInstance& inst);

}  // namespace lcsgc
