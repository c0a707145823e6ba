#pragma once

#include <string>

#include "pegboard/multicurve.hpp"

namespace pegboard {

// None draws the unit cell of the torus. Vertical keeps x mod 1 but unrolls
// the y direction, so lifts are drawn at their true heights.
enum class Cover { None, Vertical };

// Deterministic SVG. Pegs are <circle class="peg">, and each piece of a
// curve inside one cell is a <path class="curve" data-component="j">.
std::string render_svg(const Multicurve& mc, Cover cover = Cover::None);

}  // namespace pegboard
