#pragma once

#include "formgym/bitmap.hpp"
#include "formgym/layout.hpp"
#include "formgym/theme.hpp"

namespace formgym {

Bitmap render(const LayoutTree& layout, const FormState& state, const Theme& theme);

/// Tick marks every `minor_px` along the top and left bands, decimal labels
/// every `major_px`. Pixels outside the bands are copied unchanged.
Bitmap overlay_ruler(const Bitmap& bitmap, int minor_px = 50, int major_px = 100);

/// Draws `text` with the embedded glyph atlas, clipped to `clip`.
void draw_text(Bitmap& bitmap, int x, int y, std::string_view text, Rgb color, double scale,
               const Rect& clip);

}  // namespace formgym
