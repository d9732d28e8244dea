#include "formgym/render.hpp"

#include <algorithm>
#include <cmath>

#include "formgym/error.hpp"

namespace formgym {
namespace {

#include "glyph_atlas.inc"

Rgb mix(Rgb a, Rgb b, double t) {
    auto lerp = [t](std::uint8_t x, std::uint8_t y) {
        return static_cast<std::uint8_t>(std::lround(x + (static_cast<double>(y) - x) * t));
    };
    return {lerp(a.r, b.r), lerp(a.g, b.g), lerp(a.b, b.b)};
}

Rect inset(const Rect& r, int d) { return {r.left + d, r.top + d, std::max(0, r.width - 2 * d), std::max(0, r.height - 2 * d)}; }

// True when (x, y) falls in a corner cut of a box with radius r.
bool outside_corner(const Rect& box, int x, int y, int r) {
    if (r <= 0) return false;
    r = std::min({r, box.width / 2, box.height / 2});
    const int cx = x < box.left + r ? box.left + r : (x >= box.right() - r ? box.right() - r - 1 : -1);
    const int cy = y < box.top + r ? box.top + r : (y >= box.bottom() - r ? box.bottom() - r - 1 : -1);
    if (cx < 0 || cy < 0) return false;
    const int dx = x - cx;
    const int dy = y - cy;
    return dx * dx + dy * dy > r * r;
}

void fill_round(Bitmap& bm, const Rect& box, Rgb color, int radius) {
    const Rect screen{0, 0, bm.width(), bm.height()};
    for (int y = std::max(box.top, 0); y < std::min(box.bottom(), screen.height); ++y) {
        for (int x = std::max(box.left, 0); x < std::min(box.right(), screen.width); ++x) {
            if (!outside_corner(box, x, y, radius)) bm.set(x, y, color);
        }
    }
}

// Filled box with a border of `thickness` pixels.
void frame(Bitmap& bm, const Rect& box, Rgb fill, Rgb border, int thickness, int radius) {
    fill_round(bm, box, border, radius);
    fill_round(bm, inset(box, thickness), fill, std::max(0, radius - thickness));
}

void fill_circle(Bitmap& bm, const Rect& box, double radius, Rgb color) {
    const double cx = box.left + box.width / 2.0;
    const double cy = box.top + box.height / 2.0;
    for (int y = box.top; y < box.bottom(); ++y) {
        for (int x = box.left; x < box.right(); ++x) {
            const double dx = x + 0.5 - cx;
            const double dy = y + 0.5 - cy;
            if (dx * dx + dy * dy <= radius * radius) bm.set(x, y, color);
        }
    }
}

class Painter {
public:
    Painter(Bitmap& bm, const LayoutTree& layout, const FormState& state, const Theme& theme)
        : bm_(bm), layout_(layout), state_(state), theme_(theme) {
        const Palette& p = theme.palette;
        input_bg_ = mix(p.background, p.text, 0.03);
        muted_ = mix(p.border, p.background, 0.1);
        selected_bg_ = mix(p.background, p.accent, 0.25);
        button_bg_ = mix(p.background, p.border, 0.3);
    }

    void paint(const Widget& w) {
        const Palette& p = theme_.palette;
        const int r = theme_.corner_radius_px;
        const bool focused = state_.focused_widget && *state_.focused_widget == w.widget_id;
        const Rgb border = focused ? p.accent : p.border;
        const int thickness = focused ? 2 : 1;
        const FieldValue* value = w.owner_field_id ? lookup(*w.owner_field_id) : nullptr;

        switch (w.kind) {
            case WidgetKind::Label:
                if (w.widget_id.ends_with("/cal/panel")) {
                    frame(bm_, w.box, input_bg_, p.border, 1, r);
                } else if (w.payload) {
                    text_line(w.box, 0, *w.payload, w.widget_id.ends_with("/cal/title") ? p.accent : p.text, false,
                              w.widget_id.ends_with("/cal/title"));
                }
                break;
            case WidgetKind::TextBox:
            case WidgetKind::NumericBox:
            case WidgetKind::DateBox: {
                frame(bm_, w.box, input_bg_, border, thickness, r);
                const std::string text = text_of(value);
                if (text.empty() && w.kind == WidgetKind::DateBox) {
                    text_line(w.box, 6, "YYYY-MM-DD", muted_, false, false);
                } else {
                    text_line(w.box, 6, text, p.text, true, false);
                }
                break;
            }
            case WidgetKind::TextArea: {
                frame(bm_, w.box, input_bg_, border, thickness, r);
                wrapped(w.box, text_of(value));
                break;
            }
            case WidgetKind::DropdownHead: {
                frame(bm_, w.box, input_bg_, border, thickness, r);
                const LaidOutField* field = layout_.field(*w.owner_field_id);
                const auto* choice = value ? std::get_if<OptionChoice>(value) : nullptr;
                if (choice && field && choice->index >= 0 && choice->index < static_cast<int>(field->options.size())) {
                    text_line({w.box.left, w.box.top, w.box.width - 24, w.box.height}, 6,
                              field->options[static_cast<std::size_t>(choice->index)], p.text, false, false);
                } else {
                    text_line(w.box, 6, "Select...", muted_, false, false);
                }
                const int gw = glyph_width(theme_);
                draw_text(bm_, w.box.right() - gw - 8, w.box.top + (w.box.height - glyph_height(theme_)) / 2, "v",
                          p.text, theme_.font_scale, inset(w.box, 1));
                break;
            }
            case WidgetKind::DropdownOption: {
                const auto* choice = value ? std::get_if<OptionChoice>(value) : nullptr;
                const bool selected = choice && w.option_index && choice->index == *w.option_index;
                frame(bm_, w.box, selected ? selected_bg_ : input_bg_, p.border, 1, 0);
                text_line(w.box, 6, w.payload.value_or(""), p.text, false, false);
                break;
            }
            case WidgetKind::CheckboxSquare: {
                const auto* set = value ? std::get_if<OptionSet>(value) : nullptr;
                const bool checked = set && w.option_index && set->indices.contains(*w.option_index);
                frame(bm_, w.box, input_bg_, border, thickness, std::min(r, 3));
                if (checked) fill_round(bm_, inset(w.box, 4), p.accent, 0);
                break;
            }
            case WidgetKind::RadioDot: {
                const auto* choice = value ? std::get_if<OptionChoice>(value) : nullptr;
                const bool selected = choice && w.option_index && choice->index == *w.option_index;
                fill_circle(bm_, w.box, w.box.width / 2.0, border);
                fill_circle(bm_, w.box, w.box.width / 2.0 - thickness, input_bg_);
                if (selected) fill_circle(bm_, w.box, w.box.width / 4.0, p.accent);
                break;
            }
            case WidgetKind::CalendarCell: {
                bool selected = false;
                if (value && state_.overlay && w.option_index) {
                    const CivilDate m = state_.overlay->visible_month;
                    const auto date = parse_date(text_of(value));
                    selected = date && date->year == m.year && date->month == m.month && date->day == *w.option_index;
                }
                frame(bm_, w.box, selected ? p.accent : input_bg_, mix(p.border, p.background, 0.5), 1, 0);
                text_centered(w.box, w.payload.value_or(""), selected ? p.background : p.text);
                break;
            }
            case WidgetKind::CalendarNav:
                frame(bm_, w.box, button_bg_, p.border, 1, 0);
                text_centered(w.box, w.payload == "prev" ? "<" : ">", p.text);
                break;
            case WidgetKind::FileButton: {
                frame(bm_, w.box, button_bg_, border, thickness, r);
                const std::string path = text_of(value);
                if (path.empty()) {
                    text_line(w.box, 8, "Browse...", p.text, false, false);
                } else {
                    text_line(w.box, 8, path, p.text, true, false);
                }
                break;
            }
            case WidgetKind::FileDialogBox: {
                frame(bm_, w.box, input_bg_, p.accent, 2, r);
                const std::string buffer = state_.overlay ? state_.overlay->buffer : std::string();
                text_line(w.box, 6, "Path: " + buffer + "|", p.text, true, false);
                break;
            }
            case WidgetKind::NextButton:
            case WidgetKind::SubmitButton:
                fill_round(bm_, w.box, p.accent, r);
                text_centered(w.box, w.payload.value_or(""), p.background);
                break;
            case WidgetKind::RulerTick:
                bm_.fill(w.box, p.text);
                break;
        }
    }

private:
    const FieldValue* lookup(const std::string& field_id) const {
        auto it = state_.values.find(field_id);
        return it == state_.values.end() ? nullptr : &it->second;
    }

    static std::string text_of(const FieldValue* value) {
        if (!value) return {};
        if (const auto* t = std::get_if<TextEntry>(value)) return t->text;
        return {};
    }

    // One line of text, vertically centred. `tail` keeps the end visible
    // when the text overflows, as a text input scrolls to its caret.
    void text_line(const Rect& box, int pad, std::string_view text, Rgb color, bool tail, bool centered) {
        const int gw = glyph_width(theme_);
        const int gh = glyph_height(theme_);
        const Rect clip = inset(box, std::min(2, box.width / 2));
        const int room = std::max(0, (box.width - 2 * pad) / gw);
        std::string_view shown = text;
        if (tail && static_cast<int>(shown.size()) > room) shown = shown.substr(shown.size() - room);
        int x = box.left + pad;
        if (centered) x = box.left + std::max(0, (box.width - gw * static_cast<int>(shown.size())) / 2);
        draw_text(bm_, x, box.top + (box.height - gh) / 2, shown, color, theme_.font_scale, pad == 0 ? box : clip);
    }

    void text_centered(const Rect& box, std::string_view text, Rgb color) { text_line(box, 0, text, color, false, true); }

    void wrapped(const Rect& box, std::string_view text) {
        const int gw = glyph_width(theme_);
        const int lh = line_height(theme_);
        const int per_line = std::max(1, (box.width - 12) / gw);
        const Rect clip = inset(box, 2);
        int y = box.top + 4;
        std::size_t pos = 0;
        while (pos < text.size() && y < box.bottom()) {
            std::size_t len = std::min<std::size_t>(per_line, text.size() - pos);
            if (pos + len < text.size()) {
                const std::size_t space = text.substr(pos, len).rfind(' ');
                if (space != std::string_view::npos && space > 0) len = space + 1;
            }
            draw_text(bm_, box.left + 6, y + 2, text.substr(pos, len), theme_.palette.text, theme_.font_scale, clip);
            pos += len;
            y += lh;
        }
    }

    Bitmap& bm_;
    const LayoutTree& layout_;
    const FormState& state_;
    const Theme& theme_;
    Rgb input_bg_;
    Rgb muted_;
    Rgb selected_bg_;
    Rgb button_bg_;
};

}  // namespace

void draw_text(Bitmap& bitmap, int x, int y, std::string_view text, Rgb color, double scale, const Rect& clip) {
    const int cw = std::max(1, static_cast<int>(std::lround(kAtlasCellWidth * scale)));
    const int ch = std::max(1, static_cast<int>(std::lround(kAtlasCellHeight * scale)));
    const Rect bounds{0, 0, bitmap.width(), bitmap.height()};
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c < kAtlasFirstChar || c > kAtlasLastChar) c = '?';
        const auto& rows = kAtlasRows[c - kAtlasFirstChar];
        const int ox = x + static_cast<int>(i) * cw;
        if (ox >= clip.right()) break;
        for (int dy = 0; dy < ch; ++dy) {
            const unsigned char bits = rows[dy * kAtlasCellHeight / ch];
            if (!bits) continue;
            for (int dx = 0; dx < cw; ++dx) {
                if (!(bits & (0x80 >> (dx * kAtlasCellWidth / cw)))) continue;
                const int px = ox + dx;
                const int py = y + dy;
                if (clip.contains(px, py) && bounds.contains(px, py)) bitmap.set(px, py, color);
            }
        }
    }
}

Bitmap render(const LayoutTree& layout, const FormState& state, const Theme& theme) {
    Bitmap bitmap(layout.viewport.width, layout.viewport.height, theme.palette.background);
    Painter painter(bitmap, layout, state, theme);
    // Stable partition by layer keeps paint order within a layer.
    for (int layer : {0, 1}) {
        for (const auto& w : layout.widgets) {
            if (w.layer == layer) painter.paint(w);
        }
    }
    return bitmap;
}

Bitmap overlay_ruler(const Bitmap& bitmap, int minor_px, int major_px) {
    if (minor_px <= 0 || major_px <= 0 || major_px % minor_px != 0) {
        throw Error(ErrorCode::InvalidArgument, "ruler spacing must be positive with minor dividing major");
    }
    namespace m = layout_metrics;
    constexpr Rgb kBand{255, 248, 214};
    constexpr Rgb kInk{60, 60, 60};
    Bitmap out = bitmap;
    const Rect top{0, 0, out.width(), std::min(m::kRulerBandHeight, out.height())};
    const Rect left{0, 0, std::min(m::kRulerBandWidth, out.width()), out.height()};
    out.fill(top, kBand);
    out.fill(left, kBand);
    for (int x = 0; x < out.width(); x += minor_px) {
        const int len = x % major_px == 0 ? 10 : 6;
        out.fill({x, top.bottom() - len, 1, len}, kInk, top);
        if (x % major_px == 0) draw_text(out, x + 2, 2, std::to_string(x), kInk, 1.0, top);
    }
    for (int y = 0; y < out.height(); y += minor_px) {
        const int len = y % major_px == 0 ? 10 : 6;
        out.fill({left.right() - len, y, len, 1}, kInk, left);
        if (y % major_px == 0 && y > 0) draw_text(out, 2, y + 2, std::to_string(y), kInk, 1.0, left);
    }
    return out;
}

}  // namespace formgym
