#include "formgym/layout.hpp"

#include <algorithm>
#include <cmath>

#include "formgym/error.hpp"

namespace formgym {

namespace m = layout_metrics;

std::string_view widget_kind_name(WidgetKind kind) {
    switch (kind) {
        case WidgetKind::TextBox: return "TextBox";
        case WidgetKind::TextArea: return "TextArea";
        case WidgetKind::DropdownHead: return "DropdownHead";
        case WidgetKind::DropdownOption: return "DropdownOption";
        case WidgetKind::CheckboxSquare: return "CheckboxSquare";
        case WidgetKind::RadioDot: return "RadioDot";
        case WidgetKind::DateBox: return "DateBox";
        case WidgetKind::CalendarCell: return "CalendarCell";
        case WidgetKind::CalendarNav: return "CalendarNav";
        case WidgetKind::NumericBox: return "NumericBox";
        case WidgetKind::FileButton: return "FileButton";
        case WidgetKind::FileDialogBox: return "FileDialogBox";
        case WidgetKind::NextButton: return "NextButton";
        case WidgetKind::SubmitButton: return "SubmitButton";
        case WidgetKind::Label: return "Label";
        case WidgetKind::RulerTick: return "RulerTick";
    }
    return "?";
}

bool is_interactive(WidgetKind kind) { return kind != WidgetKind::Label && kind != WidgetKind::RulerTick; }

bool is_text_like(WidgetKind kind) {
    return kind == WidgetKind::TextBox || kind == WidgetKind::TextArea || kind == WidgetKind::NumericBox ||
           kind == WidgetKind::DateBox;
}

const Widget* LayoutTree::find(std::string_view widget_id) const {
    for (const auto& w : widgets) {
        if (w.widget_id == widget_id) return &w;
    }
    return nullptr;
}

const LaidOutField* LayoutTree::field(std::string_view field_id) const {
    for (const auto& f : fields) {
        if (f.field_id == field_id) return &f;
    }
    return nullptr;
}

std::vector<const Widget*> LayoutTree::owned_by(std::string_view field_id) const {
    std::vector<const Widget*> out;
    for (const auto& w : widgets) {
        if (is_interactive(w.kind) && w.owner_field_id && *w.owner_field_id == field_id) out.push_back(&w);
    }
    return out;
}

const Widget* LayoutTree::navigation() const {
    for (const auto& w : widgets) {
        if (w.kind == WidgetKind::NextButton || w.kind == WidgetKind::SubmitButton) return &w;
    }
    return nullptr;
}

int glyph_width(const Theme& theme) { return std::max(1, static_cast<int>(std::lround(8 * theme.font_scale))); }

int glyph_height(const Theme& theme) { return std::max(1, static_cast<int>(std::lround(15 * theme.font_scale))); }

int line_height(const Theme& theme) { return glyph_height(theme) + 4; }

int input_height(const Theme& theme) { return glyph_height(theme) + 12; }

int text_width(std::string_view text, const Theme& theme) {
    return glyph_width(theme) * static_cast<int>(text.size());
}

std::string field_label_text(const FieldSpec& field) {
    return field.required && field.field_type != FieldType::CheckboxInput ? field.label + " *" : field.label;
}

namespace {

// Builds one page top to bottom. Every box is derived from the running
// cursor `y_`, so the page is a pure function of its inputs.
class PageBuilder {
public:
    PageBuilder(const FormSchema& schema, const Theme& theme, Viewport viewport, int page_index)
        : schema_(schema), theme_(theme), viewport_(viewport), page_index_(page_index) {
        line_h_ = line_height(theme);
        input_h_ = input_height(theme);
        content_right_ = viewport.width - 24;
        input_left_ = theme.label_placement == LabelPlacement::Left ? m::kMarginX + m::kLeftLabelColumn : m::kMarginX;
        input_w_ = std::min(m::kInputWidth, content_right_ - input_left_);
        tree_.viewport = viewport;
        tree_.page_index = page_index;
    }

    LayoutTree build(const FormState& state) {
        if (viewport_.width < kMinViewport.width || viewport_.height < kMinViewport.height) {
            throw Error(ErrorCode::ViewportTooSmall, "viewport below 640x480");
        }
        if (input_w_ < 200) throw Error(ErrorCode::ViewportTooSmall, "viewport too narrow for inputs");

        y_ = m::kMarginTop;
        label("title", std::nullopt, m::kMarginX, y_, schema_.name);
        y_ += line_h_;
        label("page", std::nullopt, m::kMarginX, y_,
              "Page " + std::to_string(page_index_ + 1) + " of " + std::to_string(schema_.page_count));
        y_ += line_h_ + theme_.spacing_px;

        for (const FieldSpec* field : schema_.fields_on_page(page_index_)) {
            tree_.fields.push_back({field->field_id, field->field_type, field->options});
            place_field(*field);
        }

        const int nav_h = input_h_ + 4;
        const int nav_top = viewport_.height - m::kMarginBottom - nav_h;
        if (y_ > nav_top) {
            throw Error(ErrorCode::ViewportTooSmall, "page " + std::to_string(page_index_) + " of '" +
                                                         schema_.form_id + "' needs " +
                                                         std::to_string(y_ + nav_h + m::kMarginBottom) + " px height");
        }
        const bool last = page_index_ + 1 >= schema_.page_count;
        Widget nav;
        nav.widget_id = last ? "nav/submit" : "nav/next";
        nav.kind = last ? WidgetKind::SubmitButton : WidgetKind::NextButton;
        nav.box = {m::kMarginX, nav_top, m::kNavWidth, nav_h};
        nav.payload = last ? "Submit" : "Next";
        tree_.widgets.push_back(std::move(nav));

        if (state.overlay) place_overlay(*state.overlay);
        return std::move(tree_);
    }

private:
    void label(std::string id, std::optional<std::string> owner, int x, int y, std::string text, int max_width = 0) {
        Widget w;
        w.widget_id = std::move(id);
        w.owner_field_id = std::move(owner);
        w.kind = WidgetKind::Label;
        int width = std::max(1, text_width(text, theme_));
        const int limit = max_width > 0 ? max_width : content_right_ - x;
        width = std::min(width, std::max(1, limit));
        w.box = {x, y, width, line_h_};
        w.payload = std::move(text);
        tree_.widgets.push_back(std::move(w));
    }

    Widget& control(const FieldSpec& field, std::string suffix, WidgetKind kind, Rect box) {
        Widget w;
        w.widget_id = field.field_id + "/" + suffix;
        w.owner_field_id = field.field_id;
        w.kind = kind;
        w.box = box;
        tree_.widgets.push_back(std::move(w));
        return tree_.widgets.back();
    }

    void place_field(const FieldSpec& field) {
        const bool above = theme_.label_placement == LabelPlacement::Above;
        const bool self_labelled = field.field_type == FieldType::CheckboxInput;
        if (!self_labelled) {
            if (above) {
                label(field.field_id + "/label", field.field_id, m::kMarginX, y_, field_label_text(field));
                y_ += line_h_ + 2;
            } else {
                label(field.field_id + "/label", field.field_id, m::kMarginX, y_ + (input_h_ - line_h_) / 2,
                      field_label_text(field), m::kLeftLabelColumn - 8);
            }
        }
        const int height = place_control(field);
        y_ += std::max(height, above ? 0 : line_h_) + theme_.spacing_px;
    }

    // Places the field's interactive widgets at row `y_`; returns their height.
    int place_control(const FieldSpec& field) {
        switch (field.field_type) {
            case FieldType::StringInput:
                control(field, "box", WidgetKind::TextBox, {input_left_, y_, input_w_, input_h_});
                return input_h_;
            case FieldType::Description: {
                const int h = m::kTextAreaLines * line_h_ + 8;
                control(field, "box", WidgetKind::TextArea, {input_left_, y_, input_w_, h});
                return h;
            }
            case FieldType::NumericInput:
                control(field, "box", WidgetKind::NumericBox, {input_left_, y_, std::min(240, input_w_), input_h_});
                return input_h_;
            case FieldType::Date: {
                const int w = std::max(160, text_width("YYYY-MM-DD", theme_) + 16);
                control(field, "box", WidgetKind::DateBox, {input_left_, y_, std::min(w, input_w_), input_h_});
                return input_h_;
            }
            case FieldType::Dropdown: {
                std::size_t longest = 9;  // "Select..."
                for (const auto& o : field.options) longest = std::max(longest, o.size());
                const int w = std::clamp(static_cast<int>(longest) * glyph_width(theme_) + 40, 200, input_w_);
                control(field, "head", WidgetKind::DropdownHead, {input_left_, y_, w, input_h_});
                return input_h_;
            }
            case FieldType::FileUpload:
                control(field, "button", WidgetKind::FileButton, {input_left_, y_, std::min(360, input_w_), input_h_});
                return input_h_;
            case FieldType::CheckboxInput:
                return place_choices(field, WidgetKind::CheckboxSquare, {field.label});
            case FieldType::BinaryChoice:
                return place_choices(field, WidgetKind::RadioDot, field.options);
            case FieldType::MultipleChoice:
                return place_choices(field, WidgetKind::CheckboxSquare, field.options);
        }
        return 0;
    }

    int place_choices(const FieldSpec& field, WidgetKind kind, const std::vector<std::string>& texts) {
        const int row_h = input_h_;
        int x = input_left_;
        int row_top = y_;
        for (std::size_t i = 0; i < texts.size(); ++i) {
            const int text_w = std::max(1, text_width(texts[i], theme_));
            const int needed = m::kChoiceBoxSize + m::kChoiceTextGap + text_w;
            if (x > input_left_ && x + needed > content_right_) {
                x = input_left_;
                row_top += row_h + 4;
            }
            if (x + needed > content_right_) {
                throw Error(ErrorCode::ViewportTooSmall, "option text of '" + field.field_id + "' does not fit");
            }
            Widget& box = control(field, "opt/" + std::to_string(i), kind,
                                  {x, row_top + (row_h - m::kChoiceBoxSize) / 2, m::kChoiceBoxSize, m::kChoiceBoxSize});
            box.payload = texts[i];
            box.option_index = static_cast<int>(i);
            label(field.field_id + "/opt/" + std::to_string(i) + "/label", field.field_id,
                  x + m::kChoiceBoxSize + m::kChoiceTextGap, row_top + (row_h - line_h_) / 2, texts[i]);
            x += needed + m::kChoiceGap;
        }
        return row_top + row_h - y_;
    }

    // Overlay panels open below their anchor, or above it when the page
    // bottom would clip them.
    int overlay_top(const Rect& anchor, int height) const {
        const int below = anchor.bottom() + 2;
        if (below + height <= viewport_.height - m::kMarginBottom) return below;
        const int above = anchor.top - 2 - height;
        if (above >= m::kMarginTop) return above;
        throw Error(ErrorCode::ViewportTooSmall, "overlay does not fit in the viewport");
    }

    void place_overlay(const Overlay& overlay) {
        const FieldSpec* field = schema_.find_field(overlay.field_id);
        if (!field || field->page_index != page_index_) return;
        const std::string& id = field->field_id;
        switch (overlay.kind) {
            case Overlay::Kind::Dropdown: {
                const Widget* head = tree_.find(id + "/head");
                if (!head) return;
                const Rect anchor = head->box;
                const int n = static_cast<int>(field->options.size());
                const int top = overlay_top(anchor, n * input_h_);
                for (int i = 0; i < n; ++i) {
                    Widget& w = control(*field, "option/" + std::to_string(i), WidgetKind::DropdownOption,
                                        {anchor.left, top + i * input_h_, anchor.width, input_h_});
                    w.payload = field->options[static_cast<std::size_t>(i)];
                    w.option_index = i;
                    w.layer = 1;
                }
                break;
            }
            case Overlay::Kind::Calendar: {
                const Widget* box = tree_.find(id + "/box");
                if (!box) return;
                const Rect anchor = box->box;
                const CivilDate month = overlay.visible_month;
                const int first_col = weekday(CivilDate{month.year, month.month, 1});
                const int days = days_in_month(month.year, month.month);
                const int rows = (first_col + days + 6) / 7;
                const int cw = std::max(m::kCalendarCellWidth, text_width("Mo", theme_) + 10);
                const int ch = std::max(m::kCalendarCellHeight, line_h_ + 4);
                const int width = 7 * cw;
                const int height = (2 + rows) * ch;
                const int top = overlay_top(anchor, height);
                const int left = std::min(anchor.left, content_right_ - width);

                Widget panel;
                panel.widget_id = id + "/cal/panel";
                panel.owner_field_id = id;
                panel.kind = WidgetKind::Label;
                panel.box = {left, top, width, height};
                panel.layer = 1;
                tree_.widgets.push_back(std::move(panel));

                static constexpr const char* kMonths[] = {"January", "February", "March",     "April",
                                                          "May",     "June",     "July",      "August",
                                                          "September", "October", "November", "December"};
                Widget title;
                title.widget_id = id + "/cal/title";
                title.owner_field_id = id;
                title.kind = WidgetKind::Label;
                title.box = {left + cw, top, 5 * cw, ch};
                title.payload = std::string(kMonths[month.month - 1]) + " " + std::to_string(month.year);
                title.layer = 1;
                tree_.widgets.push_back(std::move(title));

                Widget& prev = control(*field, "cal/prev", WidgetKind::CalendarNav, {left, top, cw, ch});
                prev.payload = "prev";
                prev.layer = 1;
                Widget& next = control(*field, "cal/next", WidgetKind::CalendarNav, {left + 6 * cw, top, cw, ch});
                next.payload = "next";
                next.layer = 1;

                Widget weekdays;
                weekdays.widget_id = id + "/cal/weekdays";
                weekdays.owner_field_id = id;
                weekdays.kind = WidgetKind::Label;
                weekdays.box = {left, top + ch, width, ch};
                weekdays.payload = "Mo Tu We Th Fr Sa Su";
                weekdays.layer = 1;
                tree_.widgets.push_back(std::move(weekdays));

                for (int day = 1; day <= days; ++day) {
                    const int slot = first_col + day - 1;
                    Widget& cell = control(*field, "cal/day/" + std::to_string(day), WidgetKind::CalendarCell,
                                           {left + (slot % 7) * cw, top + (2 + slot / 7) * ch, cw, ch});
                    cell.payload = std::to_string(day);
                    cell.option_index = day;
                    cell.layer = 1;
                }
                break;
            }
            case Overlay::Kind::FileDialog: {
                const Widget* button = tree_.find(id + "/button");
                if (!button) return;
                const Rect anchor = button->box;
                const int width = std::min(m::kFileDialogWidth, content_right_ - anchor.left);
                const int top = overlay_top(anchor, input_h_);
                Widget& dialog = control(*field, "dialog", WidgetKind::FileDialogBox, {anchor.left, top, width, input_h_});
                dialog.layer = 1;
                break;
            }
        }
    }

    const FormSchema& schema_;
    const Theme& theme_;
    Viewport viewport_;
    int page_index_;
    int line_h_ = 0;
    int input_h_ = 0;
    int content_right_ = 0;
    int input_left_ = 0;
    int input_w_ = 0;
    int y_ = 0;
    LayoutTree tree_;
};

}  // namespace

LayoutTree compute_layout(const FormSchema& schema, const Theme& theme, Viewport viewport, int page_index,
                          const FormState& state) {
    if (page_index < 0 || page_index >= schema.page_count) {
        throw Error(ErrorCode::InvalidArgument, "page_index " + std::to_string(page_index) + " out of range");
    }
    return PageBuilder(schema, theme, viewport, page_index).build(state);
}

const Widget* hit_test(const LayoutTree& layout, int x, int y) {
    // Topmost widget wins: higher layer first, then later paint order. A
    // label on top (e.g. an overlay backdrop) shadows whatever is beneath.
    const Widget* top = nullptr;
    for (const auto& w : layout.widgets) {
        if (!w.box.contains(x, y)) continue;
        if (!top || w.layer >= top->layer) top = &w;
    }
    if (!top || !is_interactive(top->kind)) return nullptr;
    return top;
}

std::vector<std::string> check_layout(const LayoutTree& layout) {
    std::vector<std::string> problems;
    const Rect screen{0, 0, layout.viewport.width, layout.viewport.height};
    int nav_count = 0;
    for (std::size_t i = 0; i < layout.widgets.size(); ++i) {
        const Widget& w = layout.widgets[i];
        if (w.box.width <= 0 || w.box.height <= 0) problems.push_back(w.widget_id + ": empty box");
        if (!w.box.inside(screen)) problems.push_back(w.widget_id + ": outside viewport");
        if (w.kind == WidgetKind::NextButton || w.kind == WidgetKind::SubmitButton) ++nav_count;
        const bool field_owned = is_interactive(w.kind) && w.kind != WidgetKind::NextButton &&
                                 w.kind != WidgetKind::SubmitButton;
        if (field_owned && !w.owner_field_id) problems.push_back(w.widget_id + ": missing owner");
        if (!is_interactive(w.kind)) continue;
        for (std::size_t j = i + 1; j < layout.widgets.size(); ++j) {
            const Widget& o = layout.widgets[j];
            if (is_interactive(o.kind) && o.layer == w.layer && o.box.intersects(w.box)) {
                problems.push_back(w.widget_id + " overlaps " + o.widget_id);
            }
        }
    }
    if (nav_count != 1) problems.push_back("expected one navigation widget, found " + std::to_string(nav_count));
    return problems;
}

}  // namespace formgym
