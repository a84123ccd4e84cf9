#pragma once

// Deterministic SVG rendering of the upper half-plane: Ford circles, the
// Farey tessellation, and geodesic overlays.  Identical specs produce
// byte-identical output.

#include "markovgeo/exact.hpp"
#include "markovgeo/hypgeo.hpp"

#include <string>
#include <vector>

namespace markovgeo {

struct RenderSpec {
    Rational x_min = 0;
    Rational x_max = 1;
    long q_max = 5;                    // Ford circles with q <= q_max
    std::vector<Geodesic> geodesics;   // drawn on top
    long scale = 400;                  // pixels per unit
    bool farey_edges = true;
};

std::string render_svg(const RenderSpec& spec);   // invalid_argument

} // namespace markovgeo
