#ifndef MALFATTI_SVG_HPP
#define MALFATTI_SVG_HPP

#include <string>

#include "malfatti/construct.hpp"

namespace malfatti {

/// One SVG 1.1 figure: triangle edges, dashed side-line extensions reaching
/// every tangent point, the three circles, the nine tangent points as dots,
/// vertex labels, and a caption with the variant's radius formulas.
/// Output is deterministic: fixed element order, coordinates to six decimals,
/// y axis flipped to screen convention, viewBox fit to the drawing with a 5%
/// margin.
std::string render_svg(const Frame& frame, const Configuration& config,
                       const std::string& caption);

}  // namespace malfatti

#endif
