#include "formgym/action.hpp"

#include <cctype>
#include <charconv>
#include <optional>

namespace formgym {

namespace {

std::string escape(std::string_view text) {
    std::string out;
    out.reserve(text.size() + 2);
    for (char c : text) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default: out += c;
        }
    }
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// "1. ", "2) ", "- ", "* " list markers models like to prepend.
std::string_view strip_marker(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '*') && s.size() > 1 && s[1] == ' ') return trim(s.substr(2));
    std::size_t i = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i > 0 && i + 1 < s.size() && (s[i] == '.' || s[i] == ')') && s[i + 1] == ' ') return trim(s.substr(i + 2));
    return s;
}

bool starts_with_ci(std::string_view s, std::string_view prefix) {
    if (s.size() < prefix.size()) return false;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        if (std::toupper(static_cast<unsigned char>(s[i])) != prefix[i]) return false;
    }
    return true;
}

struct Cursor {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::optional<int> integer() {
        skip_ws();
        int value = 0;
        const char* begin = s.data() + pos;
        const char* end = s.data() + s.size();
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc() || ptr == begin) return std::nullopt;
        pos += static_cast<std::size_t>(ptr - begin);
        return value;
    }
    // Accepts only whitespace or a trailing comment after the closing paren.
    bool at_end() {
        skip_ws();
        return pos == s.size() || s[pos] == '#';
    }
};

std::optional<std::string> quoted(Cursor& c, std::string& error) {
    if (!c.eat('"')) {
        error = "expected a quoted string";
        return std::nullopt;
    }
    std::string out;
    while (c.pos < c.s.size()) {
        const char ch = c.s[c.pos++];
        if (ch == '"') return out;
        if (ch != '\\') {
            out += ch;
            continue;
        }
        if (c.pos >= c.s.size()) break;
        const char esc = c.s[c.pos++];
        switch (esc) {
            case '"': out += '"'; break;
            case '\\': out += '\\'; break;
            case 'n': out += '\n'; break;
            case 't': out += '\t'; break;
            case 'r': out += '\r'; break;
            default:
                error = std::string("unknown escape \\") + esc;
                return std::nullopt;
        }
    }
    error = "unterminated string";
    return std::nullopt;
}

std::optional<Action> parse_line(std::string_view line, std::string& error) {
    struct Keyword {
        std::string_view name;
        int kind;
    };
    static constexpr Keyword kKeywords[] = {
        {"DOUBLECLICK", 1}, {"RIGHTCLICK", 2}, {"CLICK", 0}, {"TYPE", 3}};
    for (const auto& kw : kKeywords) {
        if (!starts_with_ci(line, kw.name)) continue;
        Cursor c{line, kw.name.size()};
        if (!c.eat('(')) {
            error = "expected '(' after " + std::string(kw.name);
            return std::nullopt;
        }
        if (kw.kind == 3) {
            auto text = quoted(c, error);
            if (!text) return std::nullopt;
            if (!c.eat(')') || !c.at_end()) {
                error = "expected ')' to close TYPE";
                return std::nullopt;
            }
            return Type{*std::move(text)};
        }
        auto x = c.integer();
        const bool comma = x && c.eat(',');
        auto y = comma ? c.integer() : std::nullopt;
        if (!x || !y || !c.eat(')') || !c.at_end()) {
            error = std::string(kw.name) + " expects two integer coordinates";
            return std::nullopt;
        }
        switch (kw.kind) {
            case 0: return Click{*x, *y};
            case 1: return DoubleClick{*x, *y};
            default: return RightClick{*x, *y};
        }
    }
    error = "unrecognized action";
    return std::nullopt;
}

}  // namespace

std::string format_action(const Action& action) {
    return std::visit(
        [](const auto& a) -> std::string {
            using T = std::decay_t<decltype(a)>;
            if constexpr (std::is_same_v<T, Type>) {
                return "TYPE(\"" + escape(a.text) + "\")";
            } else {
                const char* name = std::is_same_v<T, Click> ? "CLICK" : std::is_same_v<T, DoubleClick> ? "DOUBLECLICK" : "RIGHTCLICK";
                return std::string(name) + "(" + std::to_string(a.x) + ", " + std::to_string(a.y) + ")";
            }
        },
        action);
}

std::string format_actions(const std::vector<Action>& actions) {
    std::string out;
    for (const auto& a : actions) {
        out += format_action(a);
        out += '\n';
    }
    return out;
}

ActionSequence parse_actions(std::string_view model_text) {
    ActionSequence seq;
    int line_no = 0;
    std::size_t start = 0;
    while (start <= model_text.size()) {
        std::size_t end = model_text.find('\n', start);
        if (end == std::string_view::npos) end = model_text.size();
        ++line_no;
        std::string_view line = trim(model_text.substr(start, end - start));
        start = end + 1;
        if (line.empty() || line.front() == '#' || line.starts_with("```")) {
            if (end == model_text.size()) break;
            continue;
        }
        line = strip_marker(line);
        std::string error;
        if (auto action = parse_line(line, error)) {
            seq.actions.push_back(*std::move(action));
        } else {
            seq.diagnostics.push_back({line_no, error + ": " + std::string(line.substr(0, 80))});
        }
        if (end == model_text.size()) break;
    }
    return seq;
}

}  // namespace formgym
