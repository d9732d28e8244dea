#pragma once

#include <memory>
#include <string>

#include <nlohmann/json.hpp>

#include "formgym/env.hpp"
#include "formgym/schema.hpp"
#include "formgym/theme.hpp"

namespace formgym::testing {

/// Schema from a compact field list: [{"id", "type", "options"?, "page"?}, ...].
inline FormSchema make_form(const std::string& form_id, const nlohmann::json& fields, int page_count = 1) {
    nlohmann::json doc;
    doc["form_id"] = form_id;
    doc["name"] = "Test Form";
    doc["domain_category"] = "Technology & Software";
    doc["page_count"] = page_count;
    doc["theme_id"] = "plain";
    doc["fields"] = nlohmann::json::array();
    for (const auto& f : fields) {
        nlohmann::json field;
        field["field_id"] = f.at("id");
        field["label"] = f.value("label", std::string("Label ") + f.at("id").get<std::string>());
        field["type"] = f.at("type");
        field["required"] = true;
        field["scored"] = true;
        field["page"] = f.value("page", 0);
        if (f.contains("options")) field["options"] = f["options"];
        if (f.contains("range")) field["numeric_range"] = {{"min", f["range"][0]}, {"max", f["range"][1]}};
        doc["fields"].push_back(field);
    }
    return load_form_schema(doc.dump());
}

inline Theme test_theme(LabelPlacement placement = LabelPlacement::Above, double scale = 1.0, int spacing = 12) {
    Theme t = builtin_theme("plain");
    t.theme_id = "test";
    t.label_placement = placement;
    t.font_scale = scale;
    t.spacing_px = spacing;
    return t;
}

inline EnvState session_for(const FormSchema& schema, const ValueMap& gold = {}, Theme theme = test_theme(),
                            Viewport viewport = kDefaultViewport) {
    auto sample = std::make_shared<GoldRecord>();
    sample->sample_id = schema.form_id + "-t";
    sample->form_id = schema.form_id;
    sample->gold = gold;
    SessionConfig config;
    config.theme = std::move(theme);
    config.viewport = viewport;
    return create_session(std::make_shared<const FormSchema>(schema), sample, config);
}

inline Click center_of(const EnvState& state, const std::string& widget_id) {
    const LayoutTree layout = current_layout(state);
    const Widget* w = layout.find(widget_id);
    if (!w) throw std::runtime_error("no widget " + widget_id);
    return Click{w->box.center_x(), w->box.center_y()};
}

/// Steps `action`, replacing `state`; returns the event.
inline StepEvent apply(EnvState& state, const Action& action) {
    StepOutcome out = step(state, action);
    state = std::move(out.state);
    return out.event;
}

}  // namespace formgym::testing
