#include "formgym/env.hpp"

#include "formgym/error.hpp"
#include "formgym/render.hpp"

namespace formgym {

namespace {

constexpr std::string_view kEventNames[] = {"Focused",  "TextEntered", "OptionSelected", "Toggled", "DateChosen",
                                            "PageTurned", "FileRecorded", "Submitted",    "NoEffect"};

bool same_widget_state(const EnvState& a, const EnvState& b) {
    return a.current_page == b.current_page && a.form == b.form && a.submitted == b.submitted;
}

bool overlay_is(const EnvState& s, Overlay::Kind kind, const std::string& field_id) {
    return s.form.overlay && s.form.overlay->kind == kind && s.form.overlay->field_id == field_id;
}

// Widget state machine for a click that landed on `w` (nullptr = background).
StepEvent click(EnvState& s, const Widget* w) {
    FormState& form = s.form;
    if (!w) {
        form.overlay.reset();
        form.focused_widget.reset();
        return {StepEventKind::Focused, std::nullopt, "blur"};
    }
    const std::optional<std::string>& owner = w->owner_field_id;
    // A click outside the open overlay closes it before acting.
    if (form.overlay && w->layer == 0 && (!owner || *owner != form.overlay->field_id)) form.overlay.reset();

    switch (w->kind) {
        case WidgetKind::TextBox:
        case WidgetKind::TextArea:
        case WidgetKind::NumericBox:
            form.overlay.reset();
            form.focused_widget = w->widget_id;
            return {StepEventKind::Focused, owner, ""};
        case WidgetKind::DateBox: {
            form.focused_widget = w->widget_id;
            if (overlay_is(s, Overlay::Kind::Calendar, *owner)) {
                form.overlay.reset();
                return {StepEventKind::Focused, owner, "calendar closed"};
            }
            Overlay overlay;
            overlay.kind = Overlay::Kind::Calendar;
            overlay.field_id = *owner;
            overlay.visible_month = calendar_reference_month(s, *owner);
            form.overlay = overlay;
            return {StepEventKind::Focused, owner, "calendar opened"};
        }
        case WidgetKind::DropdownHead:
            form.focused_widget = w->widget_id;
            if (overlay_is(s, Overlay::Kind::Dropdown, *owner)) {
                form.overlay.reset();
                return {StepEventKind::Focused, owner, "dropdown closed"};
            }
            form.overlay = Overlay{Overlay::Kind::Dropdown, *owner, {}, {}};
            return {StepEventKind::Focused, owner, "dropdown opened"};
        case WidgetKind::DropdownOption:
            form.values[*owner] = OptionChoice{*w->option_index};
            form.overlay.reset();
            form.focused_widget = *owner + "/head";
            return {StepEventKind::OptionSelected, owner, w->payload.value_or("")};
        case WidgetKind::RadioDot:
            form.values[*owner] = OptionChoice{*w->option_index};
            form.focused_widget = w->widget_id;
            return {StepEventKind::OptionSelected, owner, w->payload.value_or("")};
        case WidgetKind::CheckboxSquare: {
            auto it = form.values.find(*owner);
            if (it == form.values.end() || !std::holds_alternative<OptionSet>(it->second)) {
                it = form.values.insert_or_assign(*owner, OptionSet{}).first;
            }
            auto& indices = std::get<OptionSet>(it->second).indices;
            const int k = *w->option_index;
            const bool on = !indices.contains(k);
            if (on) {
                indices.insert(k);
            } else {
                indices.erase(k);
            }
            form.focused_widget = w->widget_id;
            return {StepEventKind::Toggled, owner, std::string(on ? "on: " : "off: ") + w->payload.value_or("")};
        }
        case WidgetKind::CalendarNav: {
            Overlay& overlay = *form.overlay;
            overlay.visible_month = add_months(overlay.visible_month, w->payload == "prev" ? -1 : 1);
            const CivilDate m = overlay.visible_month;
            return {StepEventKind::Focused, owner, "month " + format_date(m).substr(0, 7)};
        }
        case WidgetKind::CalendarCell: {
            CivilDate date = form.overlay->visible_month;
            date.day = *w->option_index;
            form.values[*owner] = TextEntry{format_date(date)};
            form.overlay.reset();
            form.focused_widget = *owner + "/box";
            return {StepEventKind::DateChosen, owner, format_date(date)};
        }
        case WidgetKind::FileButton: {
            if (overlay_is(s, Overlay::Kind::FileDialog, *owner)) {
                const std::string path = normalize_space(form.overlay->buffer);
                form.overlay.reset();
                form.focused_widget = w->widget_id;
                if (path.empty()) return {StepEventKind::Focused, owner, "file dialog cancelled"};
                form.values[*owner] = TextEntry{path};
                return {StepEventKind::FileRecorded, owner, path};
            }
            form.overlay = Overlay{Overlay::Kind::FileDialog, *owner, {}, {}};
            form.focused_widget = *owner + "/dialog";
            return {StepEventKind::Focused, owner, "file dialog opened"};
        }
        case WidgetKind::FileDialogBox:
            form.focused_widget = w->widget_id;
            return {StepEventKind::Focused, owner, ""};
        case WidgetKind::NextButton:
            form.overlay.reset();
            form.focused_widget.reset();
            ++s.current_page;
            return {StepEventKind::PageTurned, std::nullopt, "page " + std::to_string(s.current_page)};
        case WidgetKind::SubmitButton:
            form.overlay.reset();
            form.focused_widget.reset();
            s.submitted = true;
            return {StepEventKind::Submitted, std::nullopt, ""};
        case WidgetKind::Label:
        case WidgetKind::RulerTick:
            break;
    }
    return {StepEventKind::NoEffect, std::nullopt, ""};
}

StepEvent type_text(EnvState& s, const LayoutTree& layout, const std::string& text) {
    FormState& form = s.form;
    const Widget* w = form.focused_widget ? layout.find(*form.focused_widget) : nullptr;
    if (text.empty()) return {StepEventKind::NoEffect, std::nullopt, "error: empty Type"};
    if (!w || !(is_text_like(w->kind) || w->kind == WidgetKind::FileDialogBox)) {
        return {StepEventKind::NoEffect, std::nullopt, std::string(kNoFocusForType)};
    }
    const std::string& owner = *w->owner_field_id;
    if (w->kind == WidgetKind::FileDialogBox) {
        form.overlay->buffer += text;
        return {StepEventKind::TextEntered, owner, "path buffer"};
    }
    if (w->kind == WidgetKind::DateBox) form.overlay.reset();
    auto it = form.values.find(owner);
    if (it == form.values.end() || !std::holds_alternative<TextEntry>(it->second)) {
        it = form.values.insert_or_assign(owner, TextEntry{}).first;
    }
    std::get<TextEntry>(it->second).text += text;
    return {StepEventKind::TextEntered, owner, text};
}

}  // namespace

std::string_view step_event_kind_name(StepEventKind kind) { return kEventNames[static_cast<int>(kind)]; }

std::optional<StepEventKind> parse_step_event_kind(std::string_view name) {
    for (std::size_t i = 0; i < std::size(kEventNames); ++i) {
        if (kEventNames[i] == name) return static_cast<StepEventKind>(i);
    }
    return std::nullopt;
}

EnvState create_session(std::shared_ptr<const FormSchema> schema, std::shared_ptr<const GoldRecord> sample,
                        SessionConfig config, std::string session_id) {
    if (!schema) throw Error(ErrorCode::InvalidArgument, "schema is required");
    if (sample && sample->form_id != schema->form_id) {
        throw Error(ErrorCode::SchemaSampleMismatch,
                    "sample '" + sample->sample_id + "' belongs to '" + sample->form_id + "', not '" + schema->form_id + "'");
    }
    if (config.step_cap <= 0) throw Error(ErrorCode::InvalidArgument, "step_cap must be positive");
    validate_theme(config.theme);
    for (int page = 0; page < schema->page_count; ++page) {
        compute_layout(*schema, config.theme, config.viewport, page, FormState{});
    }
    EnvState state;
    state.session_id = std::move(session_id);
    state.schema = std::move(schema);
    state.sample = std::move(sample);
    state.config = std::move(config);
    return state;
}

LayoutTree current_layout(const EnvState& state) {
    return compute_layout(*state.schema, state.config.theme, state.config.viewport, state.current_page, state.form);
}

StepOutcome step(const EnvState& state, const Action& action) {
    if (state.submitted) throw Error(ErrorCode::SessionTerminated, "session '" + state.session_id + "' is submitted");
    StepOutcome out{state, {}};
    EnvState& s = out.state;
    const LayoutTree layout = current_layout(state);

    auto on_overlay_panel = [&](int x, int y) {
        for (const auto& w : layout.widgets) {
            if (w.layer == 1 && w.box.contains(x, y)) return true;
        }
        return false;
    };

    out.event = std::visit(
        [&](const auto& a) -> StepEvent {
            using T = std::decay_t<decltype(a)>;
            if constexpr (std::is_same_v<T, Type>) {
                return type_text(s, layout, a.text);
            } else if constexpr (std::is_same_v<T, RightClick>) {
                return {StepEventKind::NoEffect, std::nullopt, "right click"};
            } else {
                const Widget* w = hit_test(layout, a.x, a.y);
                if (!w && on_overlay_panel(a.x, a.y)) return {StepEventKind::NoEffect, std::nullopt, "overlay panel"};
                if constexpr (std::is_same_v<T, DoubleClick>) {
                    if (w && is_text_like(w->kind)) {
                        if (s.form.overlay && s.form.overlay->field_id != *w->owner_field_id) s.form.overlay.reset();
                        s.form.values.erase(*w->owner_field_id);
                        s.form.focused_widget = w->widget_id;
                        return {StepEventKind::TextEntered, w->owner_field_id, "cleared"};
                    }
                }
                return click(s, w);
            }
        },
        action);

    const bool changed = !same_widget_state(state, s);
    if (!changed) {
        out.event.kind = StepEventKind::NoEffect;
        if (out.event.detail.empty()) out.event.detail = "no effect";
    } else if (out.event.kind == StepEventKind::NoEffect) {
        out.event.kind = StepEventKind::Focused;
    }

    ++s.step_count;
    if (!s.submitted && s.step_count >= s.config.step_cap) {
        s.submitted = true;
        s.step_cap_reached = true;
        s.form.overlay.reset();
        s.form.focused_widget.reset();
        if (out.event.kind == StepEventKind::NoEffect) out.event.kind = StepEventKind::Submitted;
        out.event.detail += out.event.detail.empty() ? "step cap reached" : "; step cap reached";
    }
    return out;
}

Observation observe(const EnvState& state) {
    Observation obs;
    obs.screenshot = render(current_layout(state), state.form, state.config.theme);
    if (state.config.ruler_on) obs.screenshot = overlay_ruler(obs.screenshot);
    obs.page_index = state.current_page;
    obs.page_count = state.schema->page_count;
    obs.viewport = state.config.viewport;
    obs.step_count = state.step_count;
    return obs;
}

ValueMap extract_form_values(const EnvState& state) {
    ValueMap out;
    for (const auto& field : state.schema->fields) {
        auto it = state.form.values.find(field.field_id);
        if (it == state.form.values.end()) continue;
        if (auto value = canonical_value(field, it->second)) out[field.field_id] = *std::move(value);
    }
    return out;
}

CivilDate calendar_reference_month(const EnvState& state, std::string_view field_id) {
    const std::string id(field_id);
    if (auto it = state.form.values.find(id); it != state.form.values.end()) {
        if (const auto* text = std::get_if<TextEntry>(&it->second)) {
            if (auto date = parse_date(normalize_space(text->text))) return {date->year, date->month, 1};
        }
    }
    if (state.sample) {
        if (auto it = state.sample->gold.find(id); it != state.sample->gold.end()) {
            if (auto date = parse_date(it->second)) return {date->year, date->month, 1};
        }
    }
    return {2024, 1, 1};
}

}  // namespace formgym
