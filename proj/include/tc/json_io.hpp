#pragma once

/**
 * @file json_io.hpp
 * @brief JSON wire format for diagram-category values.
 *
 * Diagram: {"kind":"unoriented","bottom":2,"top":2,"pairs":[[0,2],[1,3]]},
 * oriented diagrams add "bottom_signs"/"top_signs".
 * Morphism: {"source":{...},"target":{...},"terms":[{"diagram":...,"coeff":"..."}]}.
 * Parse-then-serialize is the identity on canonical forms.
 */

#include "json.hpp"  // vendored nlohmann single header

#include "tc/morphism.hpp"

namespace tc {

using Json = nlohmann::ordered_json;

Json to_json(const DiagObject& x);
Json to_json(const Diagram& d);
Json to_json(const Morphism& m);

DiagObject object_from_json(const Json& j);
Diagram diagram_from_json(const Json& j);
Morphism morphism_from_json(const Json& j);

/// Parse with errors reported as invalid_argument naming the offender.
Json parse_json_text(const std::string& text);

}  // namespace tc
