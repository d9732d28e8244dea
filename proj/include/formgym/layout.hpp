#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "formgym/bitmap.hpp"
#include "formgym/schema.hpp"
#include "formgym/theme.hpp"
#include "formgym/values.hpp"

namespace formgym {

struct Viewport {
    int width = 1280;
    int height = 1024;

    bool operator==(const Viewport&) const = default;
};

inline constexpr Viewport kDefaultViewport{1280, 1024};
inline constexpr Viewport kMinViewport{640, 480};

enum class WidgetKind {
    TextBox,
    TextArea,
    DropdownHead,
    DropdownOption,
    CheckboxSquare,
    RadioDot,
    DateBox,
    CalendarCell,
    CalendarNav,
    NumericBox,
    FileButton,
    FileDialogBox,
    NextButton,
    SubmitButton,
    Label,
    RulerTick,
};

std::string_view widget_kind_name(WidgetKind kind);
bool is_interactive(WidgetKind kind);
/// Widgets that accept Type: TextBox, TextArea, NumericBox, DateBox.
bool is_text_like(WidgetKind kind);

struct Widget {
    std::string widget_id;
    std::optional<std::string> owner_field_id;
    WidgetKind kind = WidgetKind::Label;
    Rect box;
    std::optional<std::string> payload;  // label text, option text, day number, nav direction
    std::optional<int> option_index;     // option widgets: index into options; calendar cells: day
    int layer = 0;                       // 1 for open dropdown/calendar/file-dialog widgets

    bool operator==(const Widget&) const = default;
};

struct Overlay {
    enum class Kind { Dropdown, Calendar, FileDialog };

    Kind kind = Kind::Dropdown;
    std::string field_id;
    CivilDate visible_month;  // Calendar only; day is always 1
    std::string buffer;       // FileDialog only: path typed so far

    bool operator==(const Overlay&) const = default;
};

/// Widget-state snapshot shared by layout (overlays) and rendering (values, focus).
struct FormState {
    std::map<std::string, FieldValue> values;
    std::optional<std::string> focused_widget;
    std::optional<Overlay> overlay;

    bool operator==(const FormState&) const = default;
};

/// Per-field facts the renderer needs besides geometry.
struct LaidOutField {
    std::string field_id;
    FieldType type = FieldType::StringInput;
    std::vector<std::string> options;

    bool operator==(const LaidOutField&) const = default;
};

struct LayoutTree {
    Viewport viewport;
    int page_index = 0;
    std::vector<Widget> widgets;  // paint order; later widgets are on top
    std::vector<LaidOutField> fields;

    const Widget* find(std::string_view widget_id) const;
    const LaidOutField* field(std::string_view field_id) const;
    /// Interactive widgets owned by the field, in paint order.
    std::vector<const Widget*> owned_by(std::string_view field_id) const;
    const Widget* navigation() const;

    bool operator==(const LayoutTree&) const = default;
};

/// Pixel geometry shared with the ruler overlay: every layout keeps these
/// margins free so the ruler never covers a widget.
namespace layout_metrics {
inline constexpr int kRulerBandHeight = 24;
inline constexpr int kRulerBandWidth = 40;
inline constexpr int kMarginX = kRulerBandWidth + 24;
inline constexpr int kMarginTop = kRulerBandHeight + 16;
inline constexpr int kMarginBottom = 20;
inline constexpr int kInputWidth = 480;
inline constexpr int kTextAreaLines = 4;
inline constexpr int kLeftLabelColumn = 260;
inline constexpr int kChoiceBoxSize = 16;
inline constexpr int kChoiceTextGap = 6;
inline constexpr int kChoiceGap = 24;
inline constexpr int kNavWidth = 120;
inline constexpr int kCalendarCellWidth = 34;
inline constexpr int kCalendarCellHeight = 24;
inline constexpr int kFileDialogWidth = 420;
}  // namespace layout_metrics

/// Glyph cell size after theme scaling.
int glyph_width(const Theme& theme);
int glyph_height(const Theme& theme);
int line_height(const Theme& theme);
/// Height of single-line input boxes for the theme.
int input_height(const Theme& theme);
int text_width(std::string_view text, const Theme& theme);

/// Text shown on a field's label widget.
std::string field_label_text(const FieldSpec& field);

LayoutTree compute_layout(const FormSchema& schema, const Theme& theme, Viewport viewport,
                          int page_index, const FormState& state);

/// Topmost interactive widget containing the point, or nullptr.
const Widget* hit_test(const LayoutTree& layout, int x, int y);

/// Layout invariants (containment, non-overlap within a layer, one nav widget).
std::vector<std::string> check_layout(const LayoutTree& layout);

}  // namespace formgym
