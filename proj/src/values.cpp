#include "formgym/values.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>

namespace formgym {
namespace {

// Days since 1970-01-01 (proleptic Gregorian).
long long days_from_civil(int y, int m, int d) {
    y -= m <= 2 ? 1 : 0;
    const long long era = (y >= 0 ? y : y - 399) / 400;
    const long long yoe = y - era * 400;
    const long long doy = (153LL * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const long long doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + doe - 719468;
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

bool is_leap_year(int year) { return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0; }

int days_in_month(int year, int month) {
    static constexpr int kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (month < 1 || month > 12) return 0;
    return month == 2 && is_leap_year(year) ? 29 : kDays[month - 1];
}

int weekday(const CivilDate& date) {
    const long long days = days_from_civil(date.year, date.month, date.day);
    // 1970-01-01 was a Thursday (3 with Monday = 0).
    return static_cast<int>(((days % 7) + 7 + 3) % 7);
}

std::optional<CivilDate> parse_date(std::string_view text) {
    if (text.size() != 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
    for (std::size_t i : {0, 1, 2, 3, 5, 6, 8, 9}) {
        if (!is_digit(text[i])) return std::nullopt;
    }
    auto num = [&](std::size_t pos, std::size_t len) {
        int v = 0;
        for (std::size_t i = pos; i < pos + len; ++i) v = v * 10 + (text[i] - '0');
        return v;
    };
    CivilDate date{num(0, 4), num(5, 2), num(8, 2)};
    if (date.month < 1 || date.month > 12) return std::nullopt;
    if (date.day < 1 || date.day > days_in_month(date.year, date.month)) return std::nullopt;
    return date;
}

std::string format_date(const CivilDate& date) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", date.year, date.month, date.day);
    return buf;
}

CivilDate add_months(CivilDate date, int delta) {
    const int index = date.year * 12 + (date.month - 1) + delta;
    return CivilDate{index / 12, index % 12 + 1, 1};
}

int months_between(const CivilDate& from, const CivilDate& to) {
    return (to.year * 12 + to.month) - (from.year * 12 + from.month);
}

std::optional<Decimal> parse_decimal(std::string_view text) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    std::int64_t whole = 0;
    int whole_digits = 0;
    bool last_was_comma = false;
    for (; i < text.size() && (is_digit(text[i]) || text[i] == ','); ++i) {
        if (text[i] == ',') {
            if (whole_digits == 0 || last_was_comma) return std::nullopt;
            last_was_comma = true;
            continue;
        }
        last_was_comma = false;
        if (++whole_digits > 15) return std::nullopt;
        whole = whole * 10 + (text[i] - '0');
    }
    if (last_was_comma) return std::nullopt;
    std::int64_t frac = 0;
    int frac_digits = 0;
    bool round_up = false;
    if (i < text.size() && text[i] == '.') {
        ++i;
        for (; i < text.size() && is_digit(text[i]); ++i) {
            if (frac_digits < 2) {
                frac = frac * 10 + (text[i] - '0');
            } else if (frac_digits == 2) {
                round_up = text[i] >= '5';
            }
            ++frac_digits;
        }
        if (frac_digits == 0 && whole_digits == 0) return std::nullopt;
    }
    if (i != text.size() || (whole_digits == 0 && frac_digits == 0)) return std::nullopt;
    if (frac_digits == 1) frac *= 10;
    std::int64_t hundredths = whole * 100 + frac + (round_up ? 1 : 0);
    if (negative) hundredths = -hundredths;
    return Decimal{hundredths};
}

std::string format_decimal(Decimal value) {
    const bool negative = value.hundredths < 0;
    const std::int64_t magnitude = negative ? -value.hundredths : value.hundredths;
    std::string out = (negative ? "-" : "") + std::to_string(magnitude / 100);
    const int frac = static_cast<int>(magnitude % 100);
    if (frac != 0) {
        char buf[4];
        std::snprintf(buf, sizeof buf, "%02d", frac);
        std::string digits(buf);
        if (digits.back() == '0') digits.pop_back();
        out += "." + digits;
    }
    return out;
}

double to_double(Decimal value) { return static_cast<double>(value.hundredths) / 100.0; }

std::string normalize_space(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    bool pending_space = false;
    for (char c : text) {
        if (is_space(c)) {
            pending_space = !out.empty();
            continue;
        }
        if (pending_space) out.push_back(' ');
        pending_space = false;
        out.push_back(c);
    }
    return out;
}

std::string ascii_lower(std::string_view text) {
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::vector<std::string> split_multi(std::string_view value) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (start <= value.size()) {
        const std::size_t end = value.find(';', start);
        const std::size_t stop = end == std::string_view::npos ? value.size() : end;
        std::string part = normalize_space(value.substr(start, stop - start));
        if (!part.empty()) parts.push_back(std::move(part));
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    return parts;
}

namespace {

std::string canonical_text(FieldType type, std::string_view raw) {
    std::string text = normalize_space(raw);
    if (type == FieldType::NumericInput) {
        if (auto d = parse_decimal(text)) return format_decimal(*d);
    } else if (type == FieldType::Date) {
        if (auto d = parse_date(text)) return format_date(*d);
    }
    return text;
}

std::string join_selected(const FieldSpec& field, const std::set<int>& indices) {
    std::string out;
    for (int index : indices) {
        if (index < 0 || index >= static_cast<int>(field.options.size())) continue;
        if (!out.empty()) out += ';';
        out += field.options[static_cast<std::size_t>(index)];
    }
    return out;
}

}  // namespace

std::optional<std::string> canonical_value(const FieldSpec& field, const FieldValue& value) {
    if (const auto* text = std::get_if<TextEntry>(&value)) {
        if (has_options(field.field_type) || field.field_type == FieldType::CheckboxInput) return std::nullopt;
        std::string out = canonical_text(field.field_type, text->text);
        if (out.empty()) return std::nullopt;
        return out;
    }
    if (const auto* choice = std::get_if<OptionChoice>(&value)) {
        if (field.field_type != FieldType::Dropdown && field.field_type != FieldType::BinaryChoice) {
            return std::nullopt;
        }
        if (choice->index < 0 || choice->index >= static_cast<int>(field.options.size())) return std::nullopt;
        return field.options[static_cast<std::size_t>(choice->index)];
    }
    const auto& set = std::get<OptionSet>(value);
    if (field.field_type == FieldType::CheckboxInput) {
        if (set.indices.contains(0)) return std::string(kCheckedValue);
        return std::nullopt;
    }
    if (field.field_type != FieldType::MultipleChoice) return std::nullopt;
    std::string out = join_selected(field, set.indices);
    if (out.empty()) return std::nullopt;
    return out;
}

std::string canonicalize_string(const FieldSpec& field, std::string_view value) {
    switch (field.field_type) {
        case FieldType::MultipleChoice: {
            std::set<int> indices;
            std::vector<std::string> unknown;
            for (auto& part : split_multi(value)) {
                auto it = std::find(field.options.begin(), field.options.end(), part);
                if (it == field.options.end()) {
                    unknown.push_back(part);
                } else {
                    indices.insert(static_cast<int>(it - field.options.begin()));
                }
            }
            std::string out = join_selected(field, indices);
            for (auto& part : unknown) out += (out.empty() ? "" : ";") + part;
            return out;
        }
        case FieldType::CheckboxInput:
            return ascii_lower(normalize_space(value));
        default:
            return canonical_text(field.field_type, value);
    }
}

bool is_canonical(const FieldSpec& field, std::string_view value) {
    if (value.empty() || canonicalize_string(field, value) != value) return false;
    switch (field.field_type) {
        case FieldType::Date: return parse_date(value).has_value();
        case FieldType::NumericInput: return parse_decimal(value).has_value();
        case FieldType::Dropdown:
        case FieldType::BinaryChoice:
            return std::find(field.options.begin(), field.options.end(), value) != field.options.end();
        case FieldType::MultipleChoice:
            for (auto& part : split_multi(value)) {
                if (std::find(field.options.begin(), field.options.end(), part) == field.options.end()) return false;
            }
            return true;
        case FieldType::CheckboxInput: return value == kCheckedValue;
        default: return true;
    }
}

}  // namespace formgym
