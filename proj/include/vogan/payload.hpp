#pragma once

#include "vogan/serialize.hpp"

namespace vogan {

// JSON bodies shared by the CLI and the HTTP service. Operation payloads on a
// diagram that did not come from the catalog carry "verified":false.

Json families_payload();
Json press_payload(const Diagram& d, Circling c, NodeId vertex);
Json orbit_payload(const Diagram& d, Circling c, const EngineOptions& opts);
Json related_payload(const Diagram& d, Circling c1, Circling c2, const EngineOptions& opts);
Json equivalent_payload(const Diagram& d, Circling c1, Circling c2, const EngineOptions& opts);
Json reduce_payload(const Diagram& d, Circling c, const EngineOptions& opts);
Json admissible_payload(const Diagram& d, Circling c);
Json symmetries_payload(const Diagram& d);
Json classify_payload(const Diagram& d, const EngineOptions& opts);
// Needs a catalog diagram; throws Error(DimensionMismatch) otherwise.
Json reflect_payload(const Diagram& d, Circling c, NodeId vertex);

}  // namespace vogan
