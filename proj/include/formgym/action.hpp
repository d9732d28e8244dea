#pragma once

#include <string>
#include <variant>
#include <vector>

namespace formgym {

struct Click {
    int x = 0;
    int y = 0;
    bool operator==(const Click&) const = default;
};
struct DoubleClick {
    int x = 0;
    int y = 0;
    bool operator==(const DoubleClick&) const = default;
};
struct RightClick {
    int x = 0;
    int y = 0;
    bool operator==(const RightClick&) const = default;
};
struct Type {
    std::string text;
    bool operator==(const Type&) const = default;
};

using Action = std::variant<Click, DoubleClick, RightClick, Type>;

struct Diagnostic {
    int line_no = 0;  // 1-based line in the model text
    std::string message;

    bool operator==(const Diagnostic&) const = default;
};

struct ActionSequence {
    std::vector<Action> actions;
    std::vector<Diagnostic> diagnostics;
};

/// One DSL line, e.g. `CLICK(412, 305)` or `TYPE("Jane \"JD\" Doe")`.
std::string format_action(const Action& action);
/// Actions one per line, each optionally preceded by a `# comment` line.
std::string format_actions(const std::vector<Action>& actions);

/// Error-tolerant parse of model output. Never throws: unparseable lines end
/// up in `diagnostics`.
ActionSequence parse_actions(std::string_view model_text);

}  // namespace formgym
