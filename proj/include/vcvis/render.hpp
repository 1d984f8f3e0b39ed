#pragma once

#include <ostream>
#include <string>
#include <string_view>

#include "vcvis/decomposition.hpp"

namespace vcvis {

struct RenderOptions {
  bool signature_labels = false;
  double width = 800.0;  // pixels; height follows the aspect ratio
};

// Fill colour for a face whose signature has `size` of `point_count` labels.
// Red for all points, then brown, light green, light blue, plum, khaki and
// light grey as labels go missing; white for the empty signature.
std::string_view palette_color(std::size_t size, std::size_t point_count);

void render_svg(const FaceDecomposition& dec, const PointSet& points, std::ostream& out,
                const RenderOptions& options = {});
std::string render_svg(const FaceDecomposition& dec, const PointSet& points,
                       const RenderOptions& options = {});

}  // namespace vcvis
