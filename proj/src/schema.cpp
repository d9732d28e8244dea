#include "formgym/schema.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "formgym/digest.hpp"

namespace formgym {

using ordered_json = nlohmann::ordered_json;

std::string_view field_type_name(FieldType type) {
    switch (type) {
        case FieldType::StringInput: return "StringInput";
        case FieldType::Description: return "Description";
        case FieldType::Dropdown: return "Dropdown";
        case FieldType::Date: return "Date";
        case FieldType::BinaryChoice: return "BinaryChoice";
        case FieldType::MultipleChoice: return "MultipleChoice";
        case FieldType::CheckboxInput: return "CheckboxInput";
        case FieldType::NumericInput: return "NumericInput";
        case FieldType::FileUpload: return "FileUpload";
    }
    return "?";
}

std::optional<FieldType> parse_field_type(std::string_view name) {
    for (FieldType type : kAllFieldTypes) {
        if (field_type_name(type) == name) return type;
    }
    return std::nullopt;
}

bool has_options(FieldType type) {
    return type == FieldType::Dropdown || type == FieldType::BinaryChoice || type == FieldType::MultipleChoice;
}

bool is_typed(FieldType type) {
    return type == FieldType::StringInput || type == FieldType::Description || type == FieldType::NumericInput;
}

const FieldSpec* FormSchema::find_field(std::string_view field_id) const {
    for (const auto& field : fields) {
        if (field.field_id == field_id) return &field;
    }
    return nullptr;
}

std::vector<const FieldSpec*> FormSchema::fields_on_page(int page) const {
    std::vector<const FieldSpec*> out;
    for (const auto& field : fields) {
        if (field.page_index == page) out.push_back(&field);
    }
    return out;
}

std::vector<const FieldSpec*> FormSchema::scored_fields() const {
    std::vector<const FieldSpec*> out;
    for (const auto& field : fields) {
        if (field.scored) out.push_back(&field);
    }
    return out;
}

std::size_t FormSchema::scored_count() const {
    return static_cast<std::size_t>(
        std::count_if(fields.begin(), fields.end(), [](const FieldSpec& f) { return f.scored; }));
}

namespace {

std::string describe_issues(const ValidationReport& report) {
    std::ostringstream out;
    out << "schema invariant violation";
    for (const auto& issue : report.issues) out << "; " << issue.subject << ": " << issue.message;
    return out.str();
}

constexpr std::string_view kFormSubject = "<form>";

}  // namespace

InvariantViolation::InvariantViolation(ValidationReport report)
    : Error(ErrorCode::InvariantViolation, describe_issues(report)), report_(std::move(report)) {}

ValidationReport validate_schema(const FormSchema& schema) {
    ValidationReport report;
    auto issue = [&](std::string subject, std::string message) {
        report.issues.push_back({std::move(subject), std::move(message)});
    };
    const std::string form(kFormSubject);

    if (schema.form_id.empty()) issue(form, "form_id is empty");
    if (schema.name.empty()) issue(form, "name is empty");
    if (schema.theme_id.empty()) issue(form, "theme_id is empty");
    if (std::find(std::begin(kDomainCategories), std::end(kDomainCategories), schema.domain_category) ==
        std::end(kDomainCategories)) {
        issue(form, "unknown domain_category '" + schema.domain_category + "'");
    }
    if (schema.page_count < 1) issue(form, "page_count must be positive");
    if (schema.fields.empty()) issue(form, "form has no fields");

    std::set<std::string> seen;
    for (const auto& field : schema.fields) {
        const std::string& id = field.field_id.empty() ? form : field.field_id;
        if (field.field_id.empty()) issue(form, "field with empty field_id");
        if (!field.field_id.empty() && !seen.insert(field.field_id).second) issue(id, "duplicate field_id");
        if (field.label.empty()) issue(id, "label is empty");

        if (has_options(field.field_type)) {
            if (field.options.empty()) {
                issue(id, "options must be non-empty for " + std::string(field_type_name(field.field_type)));
            } else if (field.field_type == FieldType::BinaryChoice && field.options.size() != 2) {
                issue(id, "BinaryChoice needs exactly 2 options");
            } else {
                std::set<std::string> distinct;
                for (const auto& option : field.options) {
                    if (option.empty() || option.find(';') != std::string::npos) {
                        issue(id, "option text must be non-empty and free of ';'");
                        break;
                    }
                    if (!distinct.insert(option).second) {
                        issue(id, "duplicate option '" + option + "'");
                        break;
                    }
                }
            }
        } else if (!field.options.empty()) {
            issue(id, "options are only allowed for Dropdown, BinaryChoice and MultipleChoice");
        }

        if (field.numeric_range) {
            if (field.field_type != FieldType::NumericInput) {
                issue(id, "numeric_range is only allowed for NumericInput");
            } else if (field.numeric_range->min > field.numeric_range->max) {
                issue(id, "numeric_range min exceeds max");
            }
        }
        if (field.page_index < 0 || field.page_index >= std::max(schema.page_count, 1)) {
            issue(id, "page_index " + std::to_string(field.page_index) + " outside [0, page_count)");
        }
    }

    if (schema.page_count > 1 && !schema.fields.empty()) {
        for (int page = 0; page < schema.page_count; ++page) {
            const bool any = std::any_of(schema.fields.begin(), schema.fields.end(),
                                         [&](const FieldSpec& f) { return f.page_index == page; });
            if (!any) issue(form, "page " + std::to_string(page) + " has no fields");
        }
    }

    report.ok = report.issues.empty();
    return report;
}

namespace {

[[noreturn]] void malformed(const std::string& what) {
    throw Error(ErrorCode::MalformedDocument, "malformed form document: " + what);
}

void check_keys(const ordered_json& object, std::initializer_list<std::string_view> allowed,
                std::string_view where) {
    for (const auto& item : object.items()) {
        if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end()) {
            malformed("unknown key '" + item.key() + "' in " + std::string(where));
        }
    }
}

template <typename T>
T required_key(const ordered_json& object, const char* key, std::string_view where) {
    auto it = object.find(key);
    if (it == object.end()) malformed("missing '" + std::string(key) + "' in " + std::string(where));
    try {
        return it->get<T>();
    } catch (const nlohmann::json::exception&) {
        malformed("wrong type for '" + std::string(key) + "' in " + std::string(where));
    }
}

FieldSpec field_from_json(const ordered_json& j) {
    if (!j.is_object()) malformed("field entry is not an object");
    check_keys(j, {"field_id", "label", "type", "options", "numeric_range", "required", "scored", "page", "hint"},
               "field");
    FieldSpec field;
    field.field_id = required_key<std::string>(j, "field_id", "field");
    const std::string where = "field '" + field.field_id + "'";
    field.label = required_key<std::string>(j, "label", where);
    const auto type_name = required_key<std::string>(j, "type", where);
    auto type = parse_field_type(type_name);
    if (!type) malformed("unknown field type '" + type_name + "'");
    field.field_type = *type;
    if (j.contains("options")) field.options = required_key<std::vector<std::string>>(j, "options", where);
    if (j.contains("numeric_range")) {
        const auto& r = j["numeric_range"];
        if (!r.is_object()) malformed("numeric_range is not an object in " + where);
        check_keys(r, {"min", "max"}, "numeric_range");
        field.numeric_range = NumericRange{required_key<double>(r, "min", where), required_key<double>(r, "max", where)};
    }
    field.required = required_key<bool>(j, "required", where);
    field.scored = required_key<bool>(j, "scored", where);
    field.page_index = required_key<int>(j, "page", where);
    if (j.contains("hint")) field.value_hint = required_key<std::string>(j, "hint", where);
    return field;
}

ordered_json field_to_json(const FieldSpec& field) {
    ordered_json j;
    j["field_id"] = field.field_id;
    j["label"] = field.label;
    j["type"] = field_type_name(field.field_type);
    if (!field.options.empty()) j["options"] = field.options;
    if (field.numeric_range) {
        j["numeric_range"] = {{"min", field.numeric_range->min}, {"max", field.numeric_range->max}};
    }
    j["required"] = field.required;
    j["scored"] = field.scored;
    j["page"] = field.page_index;
    if (!field.value_hint.empty()) j["hint"] = field.value_hint;
    return j;
}

}  // namespace

FormSchema load_form_schema(std::string_view document) {
    ordered_json j;
    try {
        j = ordered_json::parse(document);
    } catch (const nlohmann::json::parse_error& e) {
        malformed(e.what());
    }
    if (!j.is_object()) malformed("top level is not an object");
    check_keys(j, {"form_id", "name", "domain_category", "page_count", "theme_id", "fields"}, "form");

    FormSchema schema;
    schema.form_id = required_key<std::string>(j, "form_id", "form");
    schema.name = required_key<std::string>(j, "name", "form");
    schema.domain_category = required_key<std::string>(j, "domain_category", "form");
    schema.page_count = required_key<int>(j, "page_count", "form");
    schema.theme_id = required_key<std::string>(j, "theme_id", "form");
    auto fields = j.find("fields");
    if (fields == j.end() || !fields->is_array()) malformed("'fields' must be an array");
    for (const auto& entry : *fields) schema.fields.push_back(field_from_json(entry));

    auto report = validate_schema(schema);
    if (!report.ok) throw InvariantViolation(std::move(report));
    return schema;
}

std::string serialize_form_schema(const FormSchema& schema) {
    ordered_json j;
    j["form_id"] = schema.form_id;
    j["name"] = schema.name;
    j["domain_category"] = schema.domain_category;
    j["page_count"] = schema.page_count;
    j["theme_id"] = schema.theme_id;
    j["fields"] = ordered_json::array();
    for (const auto& field : schema.fields) j["fields"].push_back(field_to_json(field));
    return j.dump(2) + "\n";
}

FormSchema load_form_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_form_schema(buf.str());
}

std::vector<FormSchema> load_catalog_dir(const std::string& dir) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) throw Error(ErrorCode::Io, "not a directory: " + dir);
    std::vector<fs::path> paths;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".form") paths.push_back(entry.path());
    }
    std::sort(paths.begin(), paths.end());
    std::vector<FormSchema> catalog;
    for (const auto& path : paths) {
        catalog.push_back(load_form_file(path.string()));
        if (catalog.back().form_id != path.stem().string()) {
            throw Error(ErrorCode::MalformedDocument,
                        path.string() + ": form_id '" + catalog.back().form_id + "' does not match file name");
        }
    }
    return catalog;
}

void write_catalog_dir(const std::vector<FormSchema>& catalog, const std::string& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    for (const auto& schema : catalog) {
        const auto path = fs::path(dir) / (schema.form_id + ".form");
        std::ofstream out(path, std::ios::binary);
        if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
        out << serialize_form_schema(schema);
    }
}

const FormSchema* find_form(const std::vector<FormSchema>& catalog, std::string_view form_id) {
    for (const auto& schema : catalog) {
        if (schema.form_id == form_id) return &schema;
    }
    return nullptr;
}

std::string catalog_hash(const std::vector<FormSchema>& catalog) {
    // Sorted by form id so a catalog directory hashes like the list it came from.
    std::vector<const FormSchema*> sorted;
    for (const auto& schema : catalog) sorted.push_back(&schema);
    std::sort(sorted.begin(), sorted.end(),
              [](const FormSchema* a, const FormSchema* b) { return a->form_id < b->form_id; });
    std::string all;
    for (const FormSchema* schema : sorted) all += serialize_form_schema(*schema);
    return sha256_hex(all);
}

void paginate(FormSchema& schema, int max_per_page) {
    const int n = static_cast<int>(schema.fields.size());
    const int pages = std::max(2, (n + max_per_page - 1) / max_per_page);
    // Balanced split: the first (n % pages) pages take one extra field.
    const int base = n / pages;
    const int extra = n % pages;
    int index = 0;
    for (int page = 0; page < pages; ++page) {
        const int count = base + (page < extra ? 1 : 0);
        for (int k = 0; k < count; ++k) schema.fields[static_cast<std::size_t>(index++)].page_index = page;
    }
    schema.page_count = pages;
}

}  // namespace formgym
