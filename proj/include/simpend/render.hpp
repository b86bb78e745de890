#pragma once

#include <string>

#include "simpend/frieze.hpp"

namespace simpend {

// SVG 1.1 picture of render_model(d, w): point columns 20 units apart,
// positive points on the top row, cups and caps as half circles,
// transversals as straight lines.
std::string render_svg(const Frieze& d, int w);

// The same picture on a character grid, one column per point.
std::string render_ascii(const Frieze& d, int w);

}  // namespace simpend
