#pragma once

#include "koch/chain.hpp"

#include <optional>
#include <string>

namespace koch {

enum class RenderMode { Primal, Dual };

struct RenderOptions {
  RenderMode mode = RenderMode::Primal;
  int width_px = 800;
  /// Dual mode: half-width of the drawn window. Defaults to the
  /// arrangement's clip box.
  std::optional<Rational> clip;
  /// Dual mode: write each face's edge count at a point inside it.
  bool label_faces = true;
};

/// Deterministic SVG document. Coordinates are rounded to doubles here and
/// nowhere else.
std::string render_svg(const Chain& chain, const RenderOptions& options);

}  // namespace koch
