#pragma once

#include <string>

#include "ramsey/graph.hpp"

namespace ramsey {

/// graph6 encoding (standard format: 6-bit chars 63..126, upper triangle
/// column by column). Supports n <= 258047; an optional ">>graph6<<" header
/// is accepted on input. Throws std::invalid_argument on malformed input.
std::string writeGraph6(const Graph& g);
Graph readGraph6(const std::string& text);

}  // namespace ramsey
