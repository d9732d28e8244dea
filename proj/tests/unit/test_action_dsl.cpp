#include <doctest.h>

#include "formgym/action.hpp"
#include "formgym/random.hpp"

using namespace formgym;

TEST_CASE("plain grammar lines parse") {
    const ActionSequence seq = parse_actions("CLICK(412, 305)\nTYPE(\"Jane Doe\")");
    REQUIRE(seq.actions.size() == 2);
    CHECK(seq.actions[0] == Action{Click{412, 305}});
    CHECK(seq.actions[1] == Action{Type{"Jane Doe"}});
    CHECK(seq.diagnostics.empty());
}

TEST_CASE("fences, list markers and case are normalized") {
    const ActionSequence seq = parse_actions("```\n1. click(10,20)\n```");
    REQUIRE(seq.actions.size() == 1);
    CHECK(seq.actions[0] == Action{Click{10, 20}});
    CHECK(seq.diagnostics.empty());

    const ActionSequence more = parse_actions("- DoubleClick( 3 , 4 )\n* rightclick(5,6)  # context menu\n2) Type(\"x\")");
    REQUIRE(more.actions.size() == 3);
    CHECK(more.actions[0] == Action{DoubleClick{3, 4}});
    CHECK(more.actions[1] == Action{RightClick{5, 6}});
    CHECK(more.actions[2] == Action{Type{"x"}});
}

TEST_CASE("malformed lines become diagnostics with line numbers") {
    const ActionSequence seq = parse_actions("CLICK(a, b)");
    CHECK(seq.actions.empty());
    REQUIRE(seq.diagnostics.size() == 1);
    CHECK(seq.diagnostics[0].line_no == 1);

    const ActionSequence mixed = parse_actions("I will fill the name.\nCLICK(1, 2)\nTYPE(\"unterminated)\nTYPE(\"bad \\q\")");
    CHECK(mixed.actions.size() == 1);
    REQUIRE(mixed.diagnostics.size() == 3);
    CHECK(mixed.diagnostics[0].line_no == 1);
    CHECK(mixed.diagnostics[1].line_no == 3);
    CHECK(mixed.diagnostics[2].line_no == 4);
}

TEST_CASE("comments and blank lines are skipped") {
    const ActionSequence seq = parse_actions("\n# fill the company\n\nCLICK(1, 2)\n   \n");
    CHECK(seq.actions.size() == 1);
    CHECK(seq.diagnostics.empty());
}

TEST_CASE("escapes survive in typed text") {
    const ActionSequence seq = parse_actions(R"(TYPE("Jane \"JD\" Doe\\n\nline # not a comment"))");
    REQUIRE(seq.actions.size() == 1);
    CHECK(std::get<Type>(seq.actions[0]).text == "Jane \"JD\" Doe\\n\nline # not a comment");
}

TEST_CASE("format then parse is the identity on random action lists") {
    const std::string alphabet = "abcXYZ 019\"\\\n\t\r#,()'-/@.";
    for (std::uint64_t trial = 0; trial < 200; ++trial) {
        RandomStream rng = derive_stream(3, "dsl-roundtrip", trial);
        std::vector<Action> actions;
        const auto n = rng.below(12);
        for (std::uint64_t i = 0; i < n; ++i) {
            const int x = static_cast<int>(rng.between(-50, 3000));
            const int y = static_cast<int>(rng.between(-50, 3000));
            switch (rng.below(4)) {
                case 0: actions.emplace_back(Click{x, y}); break;
                case 1: actions.emplace_back(DoubleClick{x, y}); break;
                case 2: actions.emplace_back(RightClick{x, y}); break;
                default: {
                    std::string text;
                    const auto len = rng.between(1, 20);
                    for (std::int64_t k = 0; k < len; ++k) text += alphabet[rng.below(alphabet.size())];
                    actions.emplace_back(Type{text});
                }
            }
        }
        const ActionSequence parsed = parse_actions(format_actions(actions));
        CAPTURE(trial);
        CHECK(parsed.diagnostics.empty());
        CHECK(parsed.actions == actions);
    }
}

TEST_CASE("format_action shapes") {
    CHECK(format_action(Click{300, 140}) == "CLICK(300, 140)");
    CHECK(format_action(Type{"a\"b"}) == "TYPE(\"a\\\"b\")");
    CHECK(format_action(DoubleClick{1, 2}) == "DOUBLECLICK(1, 2)");
}
