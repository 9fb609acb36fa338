#pragma once

#include <string>

#include "vogan/engine.hpp"

namespace vogan {

// Text drawing: the longest simple path on one line, remaining edges listed
// below. Glyphs: O white, X grey, @ black; circled ids in parentheses.
// Multiple edges read "=k>" with the arrow pointing at the shorter root.
std::string render_ascii(const Diagram& d, Circling c = {});

// Graphviz "graph" text. Circled vertices get a double border.
std::string render_dot(const Diagram& d, Circling c = {});

}  // namespace vogan
