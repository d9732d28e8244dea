#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "formgym/error.hpp"
#include "formgym/layout.hpp"
#include "formgym/random.hpp"
#include "formgym/render.hpp"
#include "support.hpp"

using namespace formgym;
using namespace formgym::testing;

namespace {

// Straight-line reimplementation of the label-above walk for StringInput-only
// pages: header (title row, page row), then label row plus input row per field.
struct WalkBoxes {
    std::vector<Rect> labels;
    std::vector<Rect> inputs;
    Rect nav;
};

WalkBoxes reference_walk(int field_count, const std::vector<std::string>& label_texts, double scale, int spacing,
                         Viewport vp) {
    const int glyph_w = static_cast<int>(std::lround(8 * scale));
    const int glyph_h = static_cast<int>(std::lround(15 * scale));
    const int line = glyph_h + 4;
    const int input = glyph_h + 12;
    const int left = 40 + 24;
    const int width = std::min(480, vp.width - 24 - left);
    WalkBoxes out;
    int y = 24 + 16;
    y += line;            // title
    y += line + spacing;  // "Page 1 of 1"
    for (int i = 0; i < field_count; ++i) {
        out.labels.push_back({left, y, static_cast<int>(label_texts[i].size()) * glyph_w, line});
        y += line + 2;
        out.inputs.push_back({left, y, width, input});
        y += input + spacing;
    }
    out.nav = {left, vp.height - 20 - (input + 4), 120, input + 4};
    return out;
}

// Exhaustive reference: scan every box, keep the highest layer and, within it,
// the last painted; labels shadow what they cover.
const Widget* brute_force_hit(const LayoutTree& layout, int x, int y) {
    const Widget* best = nullptr;
    for (std::size_t i = layout.widgets.size(); i-- > 0;) {
        const Widget& w = layout.widgets[i];
        const bool inside = x >= w.box.left && x <= w.box.left + w.box.width - 1 && y >= w.box.top &&
                            y <= w.box.top + w.box.height - 1;
        if (!inside) continue;
        if (!best || w.layer > best->layer) best = &w;
    }
    if (best && (best->kind == WidgetKind::Label || best->kind == WidgetKind::RulerTick)) return nullptr;
    return best;
}

LayoutTree random_layout(RandomStream& rng) {
    static constexpr WidgetKind kKinds[] = {WidgetKind::TextBox,      WidgetKind::TextArea,    WidgetKind::DropdownHead,
                                            WidgetKind::DropdownOption, WidgetKind::CheckboxSquare, WidgetKind::RadioDot,
                                            WidgetKind::DateBox,      WidgetKind::CalendarCell, WidgetKind::NumericBox,
                                            WidgetKind::FileButton,   WidgetKind::Label,       WidgetKind::NextButton};
    LayoutTree layout;
    layout.viewport = {200, 200};
    const int n = static_cast<int>(rng.between(5, 40));
    for (int i = 0; i < n; ++i) {
        Widget w;
        w.widget_id = "w" + std::to_string(i);
        w.kind = kKinds[rng.below(std::size(kKinds))];
        w.owner_field_id = "f" + std::to_string(i % 7);
        const int x = static_cast<int>(rng.between(-20, 199));
        const int y = static_cast<int>(rng.between(-20, 199));
        w.box = {x, y, static_cast<int>(rng.between(1, 80)), static_cast<int>(rng.between(1, 80))};
        w.layer = rng.below(4) == 0 ? 1 : 0;
        layout.widgets.push_back(std::move(w));
    }
    return layout;
}

}  // namespace

TEST_CASE("two StringInputs follow the reference layout walk") {
    const FormSchema form = make_form("walk", nlohmann::json::array({{{"id", "company"}, {"type", "StringInput"}},
                                                                     {{"id", "city"}, {"type", "StringInput"}}}));
    for (double scale : {1.0, 1.25}) {
        const Viewport vp{1280, 800};
        const LayoutTree layout = compute_layout(form, test_theme(LabelPlacement::Above, scale), vp, 0, {});
        const WalkBoxes ref = reference_walk(2, {field_label_text(form.fields[0]), field_label_text(form.fields[1])},
                                             scale, 12, vp);
        CAPTURE(scale);
        REQUIRE(layout.find("company/box"));
        CHECK(layout.find("company/box")->box == ref.inputs[0]);
        CHECK(layout.find("city/box")->box == ref.inputs[1]);
        CHECK(layout.find("company/label")->box == ref.labels[0]);
        CHECK(layout.find("city/label")->box == ref.labels[1]);
        CHECK(layout.navigation()->box == ref.nav);
        CHECK(layout.navigation()->kind == WidgetKind::SubmitButton);
        CHECK(layout.find("company/box")->box.top < layout.find("city/box")->box.top);
    }
}

TEST_CASE("layout is deterministic") {
    const FormSchema& form = builtin_catalog().front();
    const Theme& theme = builtin_theme("plain");
    CHECK(compute_layout(form, theme, kDefaultViewport, 0, {}) == compute_layout(form, theme, kDefaultViewport, 0, {}));
}

TEST_CASE("opening a drop-down adds one option widget per option") {
    const FormSchema form = make_form(
        "dd", nlohmann::json::array({{{"id", "color"}, {"type", "Dropdown"}, {"options", {"Red", "Green", "Blue", "Teal"}}}}));
    const Theme theme = test_theme();
    const LayoutTree closed = compute_layout(form, theme, kDefaultViewport, 0, {});
    auto count_kind = [](const LayoutTree& t, WidgetKind k) {
        return std::count_if(t.widgets.begin(), t.widgets.end(), [&](const Widget& w) { return w.kind == k; });
    };
    CHECK(count_kind(closed, WidgetKind::DropdownHead) == 1);
    CHECK(count_kind(closed, WidgetKind::DropdownOption) == 0);
    FormState open;
    open.overlay = Overlay{Overlay::Kind::Dropdown, "color", {}, {}};
    const LayoutTree opened = compute_layout(form, theme, kDefaultViewport, 0, open);
    CHECK(count_kind(opened, WidgetKind::DropdownOption) == 4);
    const Rect head = opened.find("color/head")->box;
    for (int i = 0; i < 4; ++i) {
        const Widget* o = opened.find("color/option/" + std::to_string(i));
        REQUIRE(o);
        CHECK(o->box.top >= head.bottom());
        CHECK(o->layer == 1);
        CHECK(o->option_index == i);
    }
    CHECK(check_layout(opened).empty());
}

TEST_CASE("every catalog page satisfies the layout invariants in every theme") {
    for (const auto& form : builtin_catalog()) {
        for (const auto& theme : builtin_themes()) {
            for (int p = 0; p < form.page_count; ++p) {
                const LayoutTree layout = compute_layout(form, theme, kDefaultViewport, p, {});
                CAPTURE(form.form_id);
                CAPTURE(theme.theme_id);
                CHECK(check_layout(layout).empty());
                CHECK(layout.navigation()->kind ==
                      (p + 1 == form.page_count ? WidgetKind::SubmitButton : WidgetKind::NextButton));
            }
        }
    }
}

TEST_CASE("open overlays keep the invariants on catalog pages") {
    for (const auto& form : builtin_catalog()) {
        for (const auto& field : form.fields) {
            std::optional<Overlay> overlay;
            if (field.field_type == FieldType::Dropdown) overlay = Overlay{Overlay::Kind::Dropdown, field.field_id, {}, {}};
            if (field.field_type == FieldType::Date) overlay = Overlay{Overlay::Kind::Calendar, field.field_id, {2024, 2, 1}, {}};
            if (field.field_type == FieldType::FileUpload) overlay = Overlay{Overlay::Kind::FileDialog, field.field_id, {}, {}};
            if (!overlay) continue;
            FormState state;
            state.overlay = overlay;
            for (const auto& theme : builtin_themes()) {
                const LayoutTree layout = compute_layout(form, theme, kDefaultViewport, field.page_index, state);
                CAPTURE(field.field_id);
                CHECK(check_layout(layout).empty());
            }
        }
    }
}

TEST_CASE("tiny viewports are rejected") {
    const FormSchema& form = builtin_catalog().front();
    CHECK_THROWS_AS(compute_layout(form, builtin_theme("plain"), {320, 240}, 0, {}), Error);
    try {
        compute_layout(form, builtin_theme("plain"), {320, 240}, 0, {});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ViewportTooSmall);
    }
}

TEST_CASE("hit test: box centre, outside viewport, label") {
    const FormSchema form = make_form("hit", nlohmann::json::array({{{"id", "name"}, {"type", "StringInput"}}}));
    const LayoutTree layout = compute_layout(form, test_theme(), kDefaultViewport, 0, {});
    const Widget* box = layout.find("name/box");
    CHECK(hit_test(layout, box->box.center_x(), box->box.center_y()) == box);
    CHECK(hit_test(layout, -5, 10) == nullptr);
    const Widget* label = layout.find("name/label");
    CHECK(hit_test(layout, label->box.left + 1, label->box.top + 1) == nullptr);
    // Closed on the left and top edges, open on the right and bottom.
    CHECK(hit_test(layout, box->box.left, box->box.top) == box);
    CHECK(hit_test(layout, box->box.right(), box->box.top) == nullptr);
    CHECK(hit_test(layout, box->box.left, box->box.bottom()) == nullptr);
}

TEST_CASE("hit test matches the exhaustive per-pixel check on random layouts") {
    for (int trial = 0; trial < 5; ++trial) {
        RandomStream rng = derive_stream(7, "unit-hit", static_cast<std::uint64_t>(trial));
        const LayoutTree layout = random_layout(rng);
        int mismatches = 0;
        for (int y = 0; y < 200; ++y) {
            for (int x = 0; x < 200; ++x) mismatches += hit_test(layout, x, y) != brute_force_hit(layout, x, y);
        }
        CHECK(mismatches == 0);
    }
}

TEST_CASE("open overlay options take priority over widgets they cover") {
    nlohmann::json fields = nlohmann::json::array();
    fields.push_back({{"id", "pick"}, {"type", "Dropdown"}, {"options", {"A", "B", "C", "D", "E"}}});
    fields.push_back({{"id", "under"}, {"type", "StringInput"}});
    const FormSchema form = make_form("cover", fields);
    FormState state;
    state.overlay = Overlay{Overlay::Kind::Dropdown, "pick", {}, {}};
    const LayoutTree layout = compute_layout(form, test_theme(), kDefaultViewport, 0, state);
    const Rect under = layout.find("under/box")->box;
    bool covered = false;
    for (int i = 0; i < 5; ++i) {
        const Rect o = layout.find("pick/option/" + std::to_string(i))->box;
        if (!o.intersects(under)) continue;
        covered = true;
        CHECK(hit_test(layout, o.center_x(), o.center_y())->widget_id == "pick/option/" + std::to_string(i));
    }
    CHECK(covered);
}
