#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "formgym/error.hpp"

namespace formgym {

enum class FieldType {
    StringInput,
    Description,
    Dropdown,
    Date,
    BinaryChoice,
    MultipleChoice,
    CheckboxInput,
    NumericInput,
    FileUpload,
};

inline constexpr FieldType kAllFieldTypes[] = {
    FieldType::StringInput,  FieldType::Description,    FieldType::Dropdown,
    FieldType::Date,         FieldType::BinaryChoice,   FieldType::MultipleChoice,
    FieldType::CheckboxInput, FieldType::NumericInput,  FieldType::FileUpload,
};

std::string_view field_type_name(FieldType type);
std::optional<FieldType> parse_field_type(std::string_view name);

/// Field types whose value is one or more entries of `options`.
bool has_options(FieldType type);
/// Field types filled by typing into a text-like widget.
bool is_typed(FieldType type);

struct NumericRange {
    double min = 0.0;
    double max = 0.0;

    bool operator==(const NumericRange&) const = default;
};

struct FieldSpec {
    std::string field_id;
    std::string label;
    FieldType field_type = FieldType::StringInput;
    std::vector<std::string> options;
    std::optional<NumericRange> numeric_range;
    bool required = true;
    bool scored = true;
    int page_index = 0;
    // Generator hint for gold values ("person_name", "email", "integer", ...).
    // Empty means the type's default generator.
    std::string value_hint;

    bool operator==(const FieldSpec&) const = default;
};

inline constexpr std::string_view kDomainCategories[] = {
    "Academic & Research",     "Professional & Business", "Arts & Creative",
    "Technology & Software",   "Finance & Banking",       "Healthcare & Medical",
    "Legal & Compliance",      "Construction & Manufacturing",
};

struct FormSchema {
    std::string form_id;
    std::string name;
    std::string domain_category;
    int page_count = 1;
    std::vector<FieldSpec> fields;
    std::string theme_id = "plain";

    const FieldSpec* find_field(std::string_view field_id) const;
    std::vector<const FieldSpec*> fields_on_page(int page_index) const;
    std::vector<const FieldSpec*> scored_fields() const;
    std::size_t scored_count() const;
    bool operator==(const FormSchema&) const = default;
};

struct ValidationIssue {
    std::string subject;  // field_id, or "<form>" for form-level problems
    std::string message;

    bool operator==(const ValidationIssue&) const = default;
};

struct ValidationReport {
    bool ok = true;
    std::vector<ValidationIssue> issues;
};

/// Raised by load_form_schema when the document parses but breaks an invariant.
class InvariantViolation : public Error {
public:
    explicit InvariantViolation(ValidationReport report);
    const ValidationReport& report() const noexcept { return report_; }

private:
    ValidationReport report_;
};

ValidationReport validate_schema(const FormSchema& schema);

FormSchema load_form_schema(std::string_view document);
std::string serialize_form_schema(const FormSchema& schema);

FormSchema load_form_file(const std::string& path);
/// Loads every `<form_id>.form` under `dir`, sorted by file name.
std::vector<FormSchema> load_catalog_dir(const std::string& dir);
void write_catalog_dir(const std::vector<FormSchema>& catalog, const std::string& dir);

/// The 25 built-in forms.
const std::vector<FormSchema>& builtin_catalog();
const FormSchema* find_form(const std::vector<FormSchema>& catalog, std::string_view form_id);

/// Hex SHA-256 over the serialized forms, ordered by form id.
std::string catalog_hash(const std::vector<FormSchema>& catalog);

/// Deterministic page assignment for multi-page forms: pages in field order,
/// at most `max_per_page` fields each, and at least two pages.
void paginate(FormSchema& schema, int max_per_page = 10);

}  // namespace formgym
