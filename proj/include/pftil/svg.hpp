#pragma once

#include <string>

#include "pftil/lattice.hpp"

namespace pftil {

// One rectangle per domino (horizontal and vertical dominoes in two
// colors), plus the region outline.  Output is deterministic: no
// timestamps, stable element order.
std::string tiling_to_svg(const DominoTiling& t);

// One polyline per path over a faint copy of the graph's vertices.
std::string family_to_svg(const PathGraph& g, const Family& f);

}  // namespace pftil
