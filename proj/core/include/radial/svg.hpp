#pragma once

#include <string>

#include "radial/drawing.hpp"
#include "radial/oracle.hpp"

namespace radial {

/// The cylinder cut open along angle 0: angle runs left to right over one
/// turn, height bottom to top. Curves that wrap are split at the seam.
std::string render_svg(const CanonicalDrawing& d);
std::string render_svg(const GeometricEmbedding& w);

}  // namespace radial
