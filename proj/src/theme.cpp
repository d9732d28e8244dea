#include "formgym/theme.hpp"

#include <nlohmann/json.hpp>

#include "formgym/error.hpp"

namespace formgym {
namespace {

std::vector<Theme> make_builtin_themes() {
    Theme plain;
    plain.theme_id = "plain";
    plain.font_scale = 1.0;
    plain.label_placement = LabelPlacement::Above;
    plain.spacing_px = 12;
    plain.palette = {{255, 255, 255}, {33, 37, 41}, {160, 166, 173}, {13, 110, 253}};
    plain.corner_radius_px = 0;

    Theme compact;
    compact.theme_id = "compact";
    compact.font_scale = 1.0;
    compact.label_placement = LabelPlacement::Left;
    compact.spacing_px = 8;
    compact.palette = {{248, 246, 240}, {45, 40, 30}, {120, 110, 95}, {176, 84, 28}};
    compact.corner_radius_px = 3;

    Theme dark;
    dark.theme_id = "dark";
    dark.font_scale = 1.25;
    dark.label_placement = LabelPlacement::Above;
    dark.spacing_px = 10;
    dark.palette = {{30, 33, 40}, {228, 230, 235}, {98, 104, 118}, {94, 200, 140}};
    dark.corner_radius_px = 6;

    return {plain, compact, dark};
}

nlohmann::ordered_json color_json(Rgb c) { return nlohmann::ordered_json::array({c.r, c.g, c.b}); }

Rgb color_from(const nlohmann::ordered_json& j) {
    if (!j.is_array() || j.size() != 3) throw Error(ErrorCode::MalformedDocument, "color must be [r, g, b]");
    Rgb c;
    const int r = j[0].get<int>(), g = j[1].get<int>(), b = j[2].get<int>();
    for (int v : {r, g, b}) {
        if (v < 0 || v > 255) throw Error(ErrorCode::MalformedDocument, "color channel out of range");
    }
    c.r = static_cast<std::uint8_t>(r);
    c.g = static_cast<std::uint8_t>(g);
    c.b = static_cast<std::uint8_t>(b);
    return c;
}

}  // namespace

void validate_theme(const Theme& theme) {
    if (theme.theme_id.empty()) throw Error(ErrorCode::InvariantViolation, "theme_id is empty");
    if (!(theme.font_scale >= 0.5 && theme.font_scale <= 4.0)) {
        throw Error(ErrorCode::InvariantViolation, "font_scale must lie in [0.5, 4]");
    }
    if (theme.spacing_px <= 0) throw Error(ErrorCode::InvariantViolation, "spacing_px must be positive");
    if (theme.corner_radius_px < 0) throw Error(ErrorCode::InvariantViolation, "corner_radius_px is negative");
}

const std::vector<Theme>& builtin_themes() {
    static const std::vector<Theme> themes = make_builtin_themes();
    return themes;
}

const Theme* find_theme(const std::vector<Theme>& themes, std::string_view theme_id) {
    for (const auto& theme : themes) {
        if (theme.theme_id == theme_id) return &theme;
    }
    return nullptr;
}

const Theme& builtin_theme(std::string_view theme_id) {
    if (const Theme* theme = find_theme(builtin_themes(), theme_id)) return *theme;
    throw Error(ErrorCode::InvalidArgument, "unknown theme '" + std::string(theme_id) + "'");
}

Theme load_theme(std::string_view document) {
    Theme theme;
    try {
        const auto j = nlohmann::ordered_json::parse(document);
        theme.theme_id = j.at("theme_id").get<std::string>();
        theme.font_scale = j.at("font_scale").get<double>();
        const auto placement = j.at("label_placement").get<std::string>();
        if (placement == "left") {
            theme.label_placement = LabelPlacement::Left;
        } else if (placement == "above") {
            theme.label_placement = LabelPlacement::Above;
        } else {
            throw Error(ErrorCode::MalformedDocument, "label_placement must be 'left' or 'above'");
        }
        theme.spacing_px = j.at("spacing_px").get<int>();
        const auto& palette = j.at("palette");
        theme.palette.background = color_from(palette.at("background"));
        theme.palette.text = color_from(palette.at("text"));
        theme.palette.border = color_from(palette.at("border"));
        theme.palette.accent = color_from(palette.at("accent"));
        theme.corner_radius_px = j.at("corner_radius_px").get<int>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::MalformedDocument, std::string("malformed theme document: ") + e.what());
    }
    validate_theme(theme);
    return theme;
}

std::string serialize_theme(const Theme& theme) {
    nlohmann::ordered_json j;
    j["theme_id"] = theme.theme_id;
    j["font_scale"] = theme.font_scale;
    j["label_placement"] = theme.label_placement == LabelPlacement::Left ? "left" : "above";
    j["spacing_px"] = theme.spacing_px;
    j["palette"] = {{"background", color_json(theme.palette.background)},
                    {"text", color_json(theme.palette.text)},
                    {"border", color_json(theme.palette.border)},
                    {"accent", color_json(theme.palette.accent)}};
    j["corner_radius_px"] = theme.corner_radius_px;
    return j.dump(2) + "\n";
}

}  // namespace formgym
