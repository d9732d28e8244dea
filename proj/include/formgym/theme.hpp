#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "formgym/bitmap.hpp"

namespace formgym {

enum class LabelPlacement { Left, Above };

struct Palette {
    Rgb background;
    Rgb text;
    Rgb border;
    Rgb accent;

    bool operator==(const Palette&) const = default;
};

struct Theme {
    std::string theme_id;
    double font_scale = 1.0;
    LabelPlacement label_placement = LabelPlacement::Above;
    int spacing_px = 12;
    Palette palette;
    int corner_radius_px = 0;

    bool operator==(const Theme&) const = default;
};

/// Throws InvariantViolation-coded Error when a measure is out of range.
void validate_theme(const Theme& theme);

const std::vector<Theme>& builtin_themes();
const Theme& builtin_theme(std::string_view theme_id);
const Theme* find_theme(const std::vector<Theme>& themes, std::string_view theme_id);

Theme load_theme(std::string_view document);
std::string serialize_theme(const Theme& theme);

}  // namespace formgym
