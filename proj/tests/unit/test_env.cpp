#include <doctest.h>

#include <map>
#include <set>

#include "formgym/error.hpp"
#include "formgym/random.hpp"
#include "formgym/render.hpp"
#include "support.hpp"

using namespace formgym;
using namespace formgym::testing;

namespace {

FormSchema machine_form() {
    nlohmann::json fields = nlohmann::json::array();
    fields.push_back({{"id", "name"}, {"type", "StringInput"}});
    fields.push_back({{"id", "color"}, {"type", "Dropdown"}, {"options", {"Red", "Green", "Blue"}}});
    fields.push_back({{"id", "agree"}, {"type", "CheckboxInput"}, {"label", "I agree"}});
    fields.push_back({{"id", "size"}, {"type", "BinaryChoice"}, {"options", {"Small", "Large"}}});
    fields.push_back({{"id", "tags"}, {"type", "MultipleChoice"}, {"options", {"X", "Y", "Z"}}});
    fields.push_back({{"id", "notes"}, {"type", "Description"}});
    return make_form("machine", fields);
}

// Independent model of the click/type transition table for the widget kinds
// in machine_form(). It tracks only what the table talks about: focus, the
// open drop-down and per-field values.
struct ReferenceMachine {
    std::optional<std::string> focus;
    std::optional<std::string> open_dropdown;
    std::map<std::string, std::string> text;  // name, notes
    std::optional<int> color;
    bool agree = false;
    std::optional<int> size;
    std::set<int> tags;

    bool operator==(const ReferenceMachine&) const = default;

    // Widgets a user can currently target.
    std::vector<std::string> targets() const {
        std::vector<std::string> out = {"name/box", "color/head", "agree/opt/0", "size/opt/0", "size/opt/1",
                                        "tags/opt/0", "tags/opt/1", "tags/opt/2", "notes/box"};
        if (open_dropdown) {
            for (int i = 0; i < 3; ++i) out.push_back("color/option/" + std::to_string(i));
        }
        return out;
    }

    StepEventKind click(const std::string& id) {
        const ReferenceMachine before = *this;
        StepEventKind kind = StepEventKind::Focused;
        if (id.rfind("color/option/", 0) != 0 && id != "color/head") open_dropdown.reset();
        if (id == "name/box" || id == "notes/box") {
            focus = id;
        } else if (id == "color/head") {
            focus = id;
            if (open_dropdown) open_dropdown.reset();
            else open_dropdown = "color";
        } else if (id.rfind("color/option/", 0) == 0) {
            color = std::stoi(id.substr(13));
            open_dropdown.reset();
            focus = "color/head";
            kind = StepEventKind::OptionSelected;
        } else if (id == "agree/opt/0") {
            agree = !agree;
            focus = id;
            kind = StepEventKind::Toggled;
        } else if (id.rfind("size/opt/", 0) == 0) {
            size = std::stoi(id.substr(9));
            focus = id;
            kind = StepEventKind::OptionSelected;
        } else if (id.rfind("tags/opt/", 0) == 0) {
            const int k = std::stoi(id.substr(9));
            if (!tags.erase(k)) tags.insert(k);
            focus = id;
            kind = StepEventKind::Toggled;
        }
        return *this == before ? StepEventKind::NoEffect : kind;
    }

    StepEventKind background() {
        const ReferenceMachine before = *this;
        focus.reset();
        open_dropdown.reset();
        return *this == before ? StepEventKind::NoEffect : StepEventKind::Focused;
    }

    StepEventKind type(const std::string& s) {
        if (focus != "name/box" && focus != "notes/box") return StepEventKind::NoEffect;
        text[focus->substr(0, focus.value().find('/'))] += s;
        return StepEventKind::TextEntered;
    }

    ValueMap values() const {
        static const char* kColors[] = {"Red", "Green", "Blue"};
        static const char* kSizes[] = {"Small", "Large"};
        static const char* kTags[] = {"X", "Y", "Z"};
        ValueMap out;
        for (const auto& [field, t] : text) {
            if (!t.empty()) out[field] = t;
        }
        if (color) out["color"] = kColors[*color];
        if (agree) out["agree"] = "checked";
        if (size) out["size"] = kSizes[*size];
        std::string joined;
        for (int k : tags) joined += (joined.empty() ? "" : ";") + std::string(kTags[k]);
        if (!joined.empty()) out["tags"] = joined;
        return out;
    }
};

}  // namespace

TEST_CASE("random click/type walks agree with the reference transition table") {
    const FormSchema form = machine_form();
    for (std::uint64_t walk = 0; walk < 30; ++walk) {
        RandomStream rng = derive_stream(11, "env-walk", walk);
        EnvState state = session_for(form);
        ReferenceMachine ref;
        for (int i = 0; i < 40; ++i) {
            const LayoutTree layout = current_layout(state);
            const auto roll = rng.below(10);
            StepEventKind expected;
            StepEvent got;
            if (roll < 2) {
                const std::string s(1, static_cast<char>('a' + rng.below(26)));
                expected = ref.type(s);
                got = apply(state, Type{s});
            } else if (roll < 3) {
                expected = ref.background();
                got = apply(state, Click{1270, 1000});
            } else {
                const auto targets = ref.targets();
                const std::string id = targets[rng.below(targets.size())];
                const Widget* w = layout.find(id);
                REQUIRE_MESSAGE(w, id);
                // Skip targets hidden under the open drop-down list.
                if (hit_test(layout, w->box.center_x(), w->box.center_y()) != w) continue;
                expected = ref.click(id);
                got = apply(state, Click{w->box.center_x(), w->box.center_y()});
            }
            CAPTURE(walk);
            CAPTURE(i);
            CHECK(got.kind == expected);
            CHECK(extract_form_values(state) == ref.values());
            CHECK(state.form.focused_widget == ref.focus);
            CHECK(state.form.overlay.has_value() == ref.open_dropdown.has_value());
        }
    }
}

TEST_CASE("click a text box then type") {
    const FormSchema form = machine_form();
    EnvState state = session_for(form);
    CHECK(apply(state, center_of(state, "name/box")).kind == StepEventKind::Focused);
    const StepEvent typed = apply(state, Type{"Acme"});
    CHECK(typed.kind == StepEventKind::TextEntered);
    CHECK(typed.field_id == "name");
    CHECK(extract_form_values(state).at("name") == "Acme");
}

TEST_CASE("typing with nothing focused has no effect") {
    EnvState state = session_for(machine_form());
    const EnvState before = state;
    const StepEvent e = apply(state, Type{"x"});
    CHECK(e.kind == StepEventKind::NoEffect);
    CHECK(e.detail.find(kNoFocusForType) == 0);
    CHECK(state.form == before.form);
}

TEST_CASE("checkbox toggling is an involution") {
    EnvState state = session_for(machine_form());
    apply(state, center_of(state, "agree/opt/0"));
    CHECK(extract_form_values(state).count("agree") == 1);
    apply(state, center_of(state, "agree/opt/0"));
    CHECK(extract_form_values(state).count("agree") == 0);
}

TEST_CASE("drop-down head then option selects and closes") {
    EnvState state = session_for(machine_form());
    apply(state, center_of(state, "color/head"));
    REQUIRE(state.form.overlay);
    const StepEvent e = apply(state, center_of(state, "color/option/2"));
    CHECK(e.kind == StepEventKind::OptionSelected);
    CHECK(extract_form_values(state).at("color") == "Blue");
    CHECK_FALSE(state.form.overlay);
}

TEST_CASE("multiple choice canonical value is ordered and joined") {
    EnvState state = session_for(machine_form());
    apply(state, center_of(state, "tags/opt/2"));
    apply(state, center_of(state, "tags/opt/0"));
    CHECK(extract_form_values(state).at("tags") == "X;Z");
}

TEST_CASE("calendar navigation and day pick produce the canonical date") {
    const FormSchema form = make_form("cal", nlohmann::json::array({{{"id", "start"}, {"type", "Date"}}}));
    EnvState state = session_for(form);
    apply(state, center_of(state, "start/box"));
    REQUIRE(state.form.overlay);
    CHECK(state.form.overlay->visible_month == CivilDate{2024, 1, 1});
    for (int i = 0; i < 4; ++i) apply(state, center_of(state, "start/cal/next"));
    const StepEvent e = apply(state, center_of(state, "start/cal/day/1"));
    CHECK(e.kind == StepEventKind::DateChosen);
    CHECK(extract_form_values(state).at("start") == "2024-05-01");
    CHECK_FALSE(state.form.overlay);
}

TEST_CASE("calendar opens on the gold month when the sample has one") {
    const FormSchema form = make_form("cal", nlohmann::json::array({{{"id", "start"}, {"type", "Date"}}}));
    EnvState state = session_for(form, {{"start", "2027-09-14"}});
    apply(state, center_of(state, "start/box"));
    CHECK(state.form.overlay->visible_month == CivilDate{2027, 9, 1});
}

TEST_CASE("typed dates are accepted in a focused date box") {
    const FormSchema form = make_form("cal", nlohmann::json::array({{{"id", "start"}, {"type", "Date"}}}));
    EnvState state = session_for(form);
    apply(state, center_of(state, "start/box"));
    apply(state, Type{"2021-12-31"});
    CHECK(extract_form_values(state).at("start") == "2021-12-31");
    CHECK_FALSE(state.form.overlay);
}

TEST_CASE("file dialog: open, type path, confirm") {
    const FormSchema form = make_form("file", nlohmann::json::array({{{"id", "cv"}, {"type", "FileUpload"}}}));
    EnvState state = session_for(form);
    apply(state, center_of(state, "cv/button"));
    REQUIRE(state.form.overlay);
    CHECK(apply(state, Type{"/home/a/cv.pdf"}).kind == StepEventKind::TextEntered);
    const StepEvent e = apply(state, center_of(state, "cv/button"));
    CHECK(e.kind == StepEventKind::FileRecorded);
    CHECK(extract_form_values(state).at("cv") == "/home/a/cv.pdf");
}

TEST_CASE("file dialog confirmed empty is a cancel") {
    const FormSchema form = make_form("file", nlohmann::json::array({{{"id", "cv"}, {"type", "FileUpload"}}}));
    EnvState state = session_for(form);
    apply(state, center_of(state, "cv/button"));
    apply(state, center_of(state, "cv/button"));
    CHECK(extract_form_values(state).empty());
    CHECK_FALSE(state.form.overlay);
}

TEST_CASE("double click clears a text field and right click does nothing") {
    EnvState state = session_for(machine_form());
    const Click c = center_of(state, "name/box");
    apply(state, c);
    apply(state, Type{"Acme"});
    CHECK(apply(state, RightClick{c.x, c.y}).kind == StepEventKind::NoEffect);
    const StepEvent e = apply(state, DoubleClick{c.x, c.y});
    CHECK(e.kind == StepEventKind::TextEntered);
    CHECK(e.detail == "cleared");
    CHECK(extract_form_values(state).count("name") == 0);
}

TEST_CASE("clicking outside an open drop-down closes it and acts") {
    EnvState state = session_for(machine_form());
    apply(state, center_of(state, "color/head"));
    REQUIRE(state.form.overlay);
    // The option list hangs below the head, so aim above it.
    const StepEvent e = apply(state, center_of(state, "name/box"));
    CHECK(e.kind == StepEventKind::Focused);
    CHECK(e.field_id == "name");
    CHECK_FALSE(state.form.overlay);
    CHECK(state.form.focused_widget == "name/box");
}

TEST_CASE("page turn, submit and termination") {
    nlohmann::json fields = nlohmann::json::array();
    fields.push_back({{"id", "a"}, {"type", "StringInput"}, {"page", 0}});
    fields.push_back({{"id", "b"}, {"type", "StringInput"}, {"page", 1}});
    const FormSchema form = make_form("pages", fields, 2);
    EnvState state = session_for(form);
    CHECK(state.current_page == 0);
    CHECK_FALSE(state.submitted);
    CHECK(apply(state, center_of(state, "nav/next")).kind == StepEventKind::PageTurned);
    CHECK(state.current_page == 1);
    CHECK(observe(state).page_index == 1);
    CHECK(apply(state, center_of(state, "nav/submit")).kind == StepEventKind::Submitted);
    CHECK(state.submitted);
    try {
        step(state, Click{1, 1});
        FAIL("expected SessionTerminated");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SessionTerminated);
    }
}

TEST_CASE("step cap ends the episode") {
    const FormSchema form = machine_form();
    auto sample = std::make_shared<GoldRecord>();
    sample->sample_id = "s";
    sample->form_id = form.form_id;
    SessionConfig config;
    config.theme = test_theme();
    config.step_cap = 3;
    EnvState state = create_session(std::make_shared<const FormSchema>(form), sample, config);
    apply(state, Type{"x"});
    apply(state, Type{"x"});
    CHECK_FALSE(state.submitted);
    const StepEvent e = apply(state, Type{"x"});
    CHECK(state.submitted);
    CHECK(state.step_cap_reached);
    CHECK(e.detail.find("step cap reached") != std::string::npos);
}

TEST_CASE("create_session: fresh state, mismatch, determinism") {
    const FormSchema& form = builtin_catalog().front();
    auto schema = std::make_shared<const FormSchema>(form);
    auto sample = std::make_shared<GoldRecord>();
    sample->sample_id = "x";
    sample->form_id = form.form_id;
    SessionConfig config;
    config.theme = builtin_theme("plain");
    const EnvState a = create_session(schema, sample, config);
    const EnvState b = create_session(schema, sample, config);
    CHECK(a.current_page == 0);
    CHECK_FALSE(a.submitted);
    CHECK(observe(a).screenshot == observe(b).screenshot);
    CHECK(observe(a).screenshot == observe(a).screenshot);

    auto other = std::make_shared<GoldRecord>(*sample);
    other->form_id = "someone_else";
    try {
        create_session(schema, other, config);
        FAIL("expected SchemaSampleMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SchemaSampleMismatch);
    }
}

TEST_CASE("ruler appears in observations only when enabled") {
    const FormSchema& form = builtin_catalog().front();
    auto schema = std::make_shared<const FormSchema>(form);
    SessionConfig config;
    config.theme = builtin_theme("plain");
    const Bitmap plain = observe(create_session(schema, nullptr, config)).screenshot;
    config.ruler_on = true;
    const Bitmap ruled = observe(create_session(schema, nullptr, config)).screenshot;
    CHECK_FALSE(plain == ruled);
    CHECK(ruled == overlay_ruler(plain));
}
