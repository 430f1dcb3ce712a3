#pragma once

#include <string>

#include "tropsd/matrix.hpp"

namespace tropsd::cli {

// Deterministic SVG drawing of the regular subdivision of 2*Delta_2 induced
// by a 3 x 3 matrix: cells as polygons, lattice points labeled with their
// heights (hollow markers for points lifted above the lower hull). Throws
// InvalidInput unless n == 3.
std::string render_subdivision_svg(const SymMatrix& a);

}  // namespace tropsd::cli
