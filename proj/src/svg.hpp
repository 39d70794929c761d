#pragma once

#include <string>

#include "representation.hpp"

namespace patternforge {

// Human-facing rendering: grounding line, one polyline/polygon per shape,
// rank labels beneath the grounding points. Coordinates are rounded to six
// decimals here and only here; nothing downstream consumes SVG.
std::string render_svg(const Representation& rep, const Rational& scale = Rational(60));

}  // namespace patternforge
