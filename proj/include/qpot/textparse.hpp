#pragma once

#include <string>

#include "qpot/novikov.hpp"

namespace qpot {

// Parses the canonical rendering grammar back into a normalized Potential.
// Variable and parameter order is order of first appearance. Throws
// ParseError (with line/column) on malformed input.
Potential parse_potential(const std::string& text);

}  // namespace qpot
