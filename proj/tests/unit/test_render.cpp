#include <doctest.h>

#include "formgym/error.hpp"
#include "formgym/render.hpp"
#include "support.hpp"

using namespace formgym;
using namespace formgym::testing;

namespace {

// Pixels that differ between two same-sized bitmaps.
std::vector<std::pair<int, int>> diff_pixels(const Bitmap& a, const Bitmap& b) {
    std::vector<std::pair<int, int>> out;
    for (int y = 0; y < a.height(); ++y) {
        for (int x = 0; x < a.width(); ++x) {
            if (!(a.at(x, y) == b.at(x, y))) out.emplace_back(x, y);
        }
    }
    return out;
}

FormSchema mixed_form() {
    nlohmann::json fields = nlohmann::json::array();
    fields.push_back({{"id", "company"}, {"type", "StringInput"}});
    fields.push_back({{"id", "agree"}, {"type", "CheckboxInput"}, {"label", "I agree"}});
    fields.push_back({{"id", "notes"}, {"type", "Description"}});
    return make_form("mixed", fields);
}

}  // namespace

TEST_CASE("render is a pure function of its inputs") {
    const FormSchema& form = builtin_catalog().front();
    for (const auto& theme : builtin_themes()) {
        const LayoutTree layout = compute_layout(form, theme, kDefaultViewport, 0, {});
        const Bitmap a = render(layout, {}, theme);
        const Bitmap b = render(layout, {}, theme);
        CHECK(a == b);
        CHECK(a.width() == 1280);
        CHECK(a.height() == 1024);
        CHECK(a.bytes().size() == 1280u * 1024u * 3u);
    }
}

TEST_CASE("checking a checkbox changes pixels only inside its square") {
    const FormSchema form = mixed_form();
    const Theme theme = test_theme();
    const LayoutTree layout = compute_layout(form, theme, kDefaultViewport, 0, {});
    FormState checked;
    checked.values["agree"] = OptionSet{{0}};
    const auto diff = diff_pixels(render(layout, {}, theme), render(layout, checked, theme));
    const Rect square = layout.find("agree/opt/0")->box;
    CHECK_FALSE(diff.empty());
    for (auto [x, y] : diff) CHECK(square.contains(x, y));
}

TEST_CASE("typed text changes pixels only inside its text box") {
    const FormSchema form = mixed_form();
    const Theme theme = test_theme();
    const LayoutTree layout = compute_layout(form, theme, kDefaultViewport, 0, {});
    FormState typed;
    typed.values["company"] = TextEntry{"Acme"};
    const auto diff = diff_pixels(render(layout, {}, theme), render(layout, typed, theme));
    const Rect box = layout.find("company/box")->box;
    CHECK_FALSE(diff.empty());
    for (auto [x, y] : diff) CHECK(box.contains(x, y));
}

TEST_CASE("focus and open overlays are visible") {
    const FormSchema form = make_form(
        "dd", nlohmann::json::array({{{"id", "color"}, {"type", "Dropdown"}, {"options", {"Red", "Green"}}}}));
    const Theme theme = test_theme();
    FormState open;
    open.overlay = Overlay{Overlay::Kind::Dropdown, "color", {}, {}};
    const LayoutTree closed_layout = compute_layout(form, theme, kDefaultViewport, 0, {});
    const LayoutTree open_layout = compute_layout(form, theme, kDefaultViewport, 0, open);
    CHECK_FALSE(render(closed_layout, {}, theme) == render(open_layout, open, theme));
    FormState focused;
    focused.focused_widget = "color/head";
    CHECK_FALSE(render(closed_layout, {}, theme) == render(closed_layout, focused, theme));
}

TEST_CASE("ruler ticks fall on multiples of the minor spacing") {
    const Bitmap blank(1280, 1024, {255, 255, 255});
    const Bitmap ruled = overlay_ruler(blank, 50, 100);
    const Rgb ink{60, 60, 60};
    // The bottom row of the top band carries only tick marks.
    for (int x = 0; x < 1280; ++x) {
        CAPTURE(x);
        CHECK((ruled.at(x, 23) == ink) == (x % 50 == 0));
    }
    // Major ticks are longer than minor ones.
    CHECK(ruled.at(100, 14) == ink);
    CHECK_FALSE(ruled.at(50, 14) == ink);
    // The rightmost column of the left band carries only tick marks.
    for (int y = 24; y < 1024; ++y) {
        CAPTURE(y);
        CHECK((ruled.at(39, y) == ink) == (y % 50 == 0));
    }
}

TEST_CASE("ruler leaves the page outside its bands untouched") {
    const FormSchema& form = builtin_catalog().front();
    const Theme& theme = builtin_theme("dark");
    const Bitmap page = render(compute_layout(form, theme, kDefaultViewport, 0, {}), {}, theme);
    const Bitmap ruled = overlay_ruler(page);
    for (int y = 24; y < page.height(); ++y) {
        for (int x = 40; x < page.width(); ++x) {
            if (!(page.at(x, y) == ruled.at(x, y))) {
                FAIL("pixel changed at " << x << "," << y);
            }
        }
    }
}

TEST_CASE("ruler labels render the coordinate value") {
    const Bitmap blank(1280, 1024, {255, 255, 255});
    const Bitmap ruled = overlay_ruler(blank, 50, 100);
    const Rgb band{255, 248, 214};
    const Rgb ink{60, 60, 60};
    const Rect top{0, 0, 1280, 24};
    for (int x = 0; x <= 1200; x += 100) {
        // Expected: the decimal text drawn alone on a plain band.
        Bitmap expected(1280, 24, band);
        draw_text(expected, x + 2, 2, std::to_string(x), ink, 1.0, top);
        const int w = 8 * static_cast<int>(std::to_string(x).size());
        int ink_pixels = 0;
        for (int y = 2; y < 17; ++y) {
            for (int px = x + 2; px < std::min(1280, x + 2 + w); ++px) {
                CHECK(ruled.at(px, y) == expected.at(px, y));
                ink_pixels += expected.at(px, y) == ink;
            }
        }
        CHECK(ink_pixels > 0);
    }
}

TEST_CASE("ruler rejects spacings where minor does not divide major") {
    CHECK_THROWS_AS(overlay_ruler(Bitmap(100, 100), 30, 100), Error);
    CHECK_THROWS_AS(overlay_ruler(Bitmap(100, 100), 0, 100), Error);
}

TEST_CASE("PNG encoding round-trips and is byte-stable") {
    const FormSchema& form = builtin_catalog().front();
    const Theme& theme = builtin_theme("compact");
    const Bitmap page = render(compute_layout(form, theme, kDefaultViewport, 0, {}), {}, theme);
    const auto png = encode_png(page);
    CHECK(png == encode_png(page));
    CHECK(decode_png(png) == page);
}
