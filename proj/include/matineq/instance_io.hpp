#pragma once

// Instance files. An instance is either inline
//
//   { "law": id, "provenance": {...}, "matrices": {role: matrix}, "vectors": {...},
//     "sequences": {...}, "scalars": {...} }
//
// or a generated reference { "law", "provenance": "generated", "dim", "seed" }.
// Square roles use the core matrix format, frames the frame format.

#include <string>

#include "matineq/laws.hpp"
#include "matineq/matrix_io.hpp"

namespace matineq {

Json instance_to_json(const LawInstance& inst);

/// Accepts both forms above, and a batch report (its worst instance).
/// Throws ParseError on malformed input and ShapeMismatch when the roles do
/// not fit the law.
LawInstance instance_from_json(const Json& j);

void save_instance(const LawInstance& inst, const std::string& path);
LawInstance load_instance(const std::string& path);

Json read_json_file(const std::string& path);
void write_json_file(const Json& j, const std::string& path);

}  // namespace matineq
