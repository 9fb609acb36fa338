#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "vogan/engine.hpp"

namespace vogan {

// Insertion-ordered so dumps are byte-stable.
using Json = nlohmann::ordered_json;

Json params_to_json(const FamilySpec& spec);
// Builds a spec from a family name and its params object, with the family's
// default parity rule. Throws Error(InvalidParams) for unknown names or
// malformed params.
FamilySpec spec_from_json(std::string_view family, const Json& params);

// Canonical diagram form. A "parity_rule" key is written only when the rule
// differs from the family default.
Json diagram_to_json(const Diagram& d);
std::string canonical_json(const Diagram& d);

// Parses and validates a diagram. The result is never marked verified since
// no realization comes with it. Throws Error(Parse) or Error(InvalidDiagram).
Diagram diagram_from_json(const Json& j);
Diagram diagram_from_string(std::string_view text);

Json circling_to_json(Circling c);
// Accepts {"circled":[...]} or a bare array of ids.
Circling circling_from_json(const Json& j);

Json steps_to_json(const PressSequence& s);
PressSequence steps_from_json(const Json& j);

Json symmetry_to_json(const Symmetry& s);
Json class_to_json(const EquivalenceClass& c);

// Parses a JSON text, mapping syntax errors to Error(Parse).
Json parse_json(std::string_view text);

}  // namespace vogan
