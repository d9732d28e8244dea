#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "formgym/schema.hpp"

namespace formgym {

struct CivilDate {
    int year = 2024;
    int month = 1;
    int day = 1;

    auto operator<=>(const CivilDate&) const = default;
};

bool is_leap_year(int year);
int days_in_month(int year, int month);
/// 0 = Monday ... 6 = Sunday.
int weekday(const CivilDate& date);
/// Strict "YYYY-MM-DD" with calendar validation.
std::optional<CivilDate> parse_date(std::string_view text);
std::string format_date(const CivilDate& date);
/// Month arithmetic on (year, month) pairs; day is preserved as 1.
CivilDate add_months(CivilDate date, int delta);
int months_between(const CivilDate& from, const CivilDate& to);

/// Decimal held as integer hundredths; canonical text has no thousands
/// separators and at most two fraction digits, trailing zeros trimmed.
struct Decimal {
    std::int64_t hundredths = 0;

    auto operator<=>(const Decimal&) const = default;
};

/// Accepts an optional sign, digits with optional ',' thousands separators and
/// a '.' fraction; more than two fraction digits round half away from zero.
std::optional<Decimal> parse_decimal(std::string_view text);
std::string format_decimal(Decimal value);
double to_double(Decimal value);

/// Trim and collapse internal whitespace runs to one space.
std::string normalize_space(std::string_view text);
std::string ascii_lower(std::string_view text);

// Live widget values, one alternative per family of field types.
struct TextEntry {  // StringInput, Description, NumericInput, Date (typed or chosen), FileUpload
    std::string text;
    bool operator==(const TextEntry&) const = default;
};
struct OptionChoice {  // Dropdown, BinaryChoice
    int index = 0;
    bool operator==(const OptionChoice&) const = default;
};
struct OptionSet {  // MultipleChoice, CheckboxInput (single implicit option 0)
    std::set<int> indices;
    bool operator==(const OptionSet&) const = default;
};
using FieldValue = std::variant<TextEntry, OptionChoice, OptionSet>;

/// Canonical value of a checked CheckboxInput.
inline constexpr std::string_view kCheckedValue = "checked";

/// Canonical string for a live value, or nullopt when the field counts as
/// unset (empty text, empty selection).
std::optional<std::string> canonical_value(const FieldSpec& field, const FieldValue& value);

/// Canonicalize a value already in string form (gold values, extracted maps).
std::string canonicalize_string(const FieldSpec& field, std::string_view value);

/// Whether `value` is already in canonical form for the field's type.
bool is_canonical(const FieldSpec& field, std::string_view value);

/// Splits a multi-select canonical value on ';'.
std::vector<std::string> split_multi(std::string_view value);

}  // namespace formgym
