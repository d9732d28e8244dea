#include <doctest.h>

#include <filesystem>
#include <set>

#include "formgym/error.hpp"
#include "formgym/schema.hpp"
#include "support.hpp"

using namespace formgym;
using formgym::testing::make_form;

namespace {

// Reference per-form statistics: field count, scored pairs per sample, number
// of distinct field types, multi-page flag and the presence columns (Date,
// binary choice, drop-down, description, file upload, multiple choice,
// checkbox, numeric). String inputs are present everywhere.
struct Row {
    const char* name;
    int fields;
    int pairs_per_sample;
    int type_count;
    bool date, binary, dropdown, description, file, multi, checkbox, numeric, multi_page;
};

constexpr Row kReference[] = {
    {"Job Application for University Positions", 4, 4, 2, 0, 0, 0, 1, 0, 0, 0, 0, 0},
    {"Grant or Research Funding Application", 6, 6, 5, 1, 1, 0, 0, 1, 0, 1, 0, 0},
    {"Paper Submission Form", 7, 6, 3, 0, 0, 1, 0, 1, 0, 0, 0, 0},
    {"Student Course Registration Form", 8, 8, 4, 0, 0, 1, 1, 0, 1, 0, 0, 0},
    {"Scholarship Application for Students", 16, 16, 4, 0, 0, 1, 1, 1, 0, 0, 0, 1},
    {"Startup Funding Application", 18, 18, 6, 1, 0, 1, 1, 1, 0, 0, 1, 1},
    {"Real Estate Rental Application", 22, 22, 6, 1, 0, 1, 1, 1, 0, 0, 1, 1},
    {"Educational Workshop Registration", 17, 17, 4, 1, 0, 1, 1, 0, 0, 0, 0, 1},
    {"Association Membership Application", 20, 20, 6, 1, 0, 1, 1, 1, 0, 1, 0, 1},
    {"Art Exhibition Submission Form", 11, 11, 6, 0, 0, 1, 1, 1, 0, 1, 1, 1},
    {"Literary Magazine Submission Form", 11, 11, 5, 0, 0, 1, 1, 1, 0, 1, 0, 1},
    {"Conference Speaker Application Form", 14, 14, 6, 0, 1, 1, 1, 1, 0, 1, 0, 1},
    {"Bug Reporting Form", 10, 10, 4, 0, 0, 1, 1, 1, 0, 0, 0, 1},
    {"IT Support Request Form", 11, 11, 5, 0, 0, 1, 1, 1, 0, 0, 1, 1},
    {"Personal Loan Application Form", 7, 7, 3, 0, 0, 1, 0, 0, 0, 0, 1, 0},
    {"Bank Account Opening Form", 5, 5, 3, 1, 0, 1, 0, 0, 0, 0, 0, 0},
    {"Financial Planning Consultation Form", 6, 6, 4, 1, 0, 1, 1, 0, 0, 0, 0, 0},
    {"Patient Consent for Surgery", 8, 8, 3, 1, 0, 0, 0, 0, 0, 1, 0, 0},
    {"Medical Research Study Enrollment", 8, 8, 4, 0, 0, 1, 1, 0, 0, 0, 1, 0},
    {"Health Insurance Claim Form", 10, 8, 5, 1, 0, 1, 1, 1, 0, 0, 0, 1},
    {"NDA Submission Form", 9, 9, 6, 1, 1, 0, 1, 0, 0, 1, 1, 0},
    {"Background Check Authorization Form", 11, 11, 4, 1, 0, 0, 1, 0, 0, 1, 0, 0},
    {"Contractor Onboarding Form", 14, 14, 6, 1, 0, 1, 1, 1, 0, 1, 0, 1},
    {"Project Bid Submission Form", 13, 13, 5, 1, 0, 0, 1, 1, 0, 0, 1, 1},
    {"Manufacturing Order Form", 13, 13, 5, 1, 0, 1, 1, 1, 0, 0, 0, 1},
};

const FormSchema* by_name(const std::string& name) {
    for (const auto& f : builtin_catalog()) {
        if (f.name == name) return &f;
    }
    return nullptr;
}

}  // namespace

TEST_CASE("catalog matches the reference per-form statistics") {
    const auto& catalog = builtin_catalog();
    CHECK(catalog.size() == std::size(kReference));
    int fields = 0;
    int pairs = 0;
    for (const Row& row : kReference) {
        CAPTURE(row.name);
        const FormSchema* form = by_name(row.name);
        REQUIRE(form != nullptr);
        CHECK(static_cast<int>(form->fields.size()) == row.fields);
        CHECK(static_cast<int>(form->scored_count()) == row.pairs_per_sample);
        CHECK((form->page_count > 1) == row.multi_page);
        std::set<FieldType> types;
        for (const auto& f : form->fields) types.insert(f.field_type);
        CHECK(static_cast<int>(types.size()) == row.type_count);
        CHECK(types.contains(FieldType::StringInput));
        CHECK(types.contains(FieldType::Date) == row.date);
        CHECK(types.contains(FieldType::BinaryChoice) == row.binary);
        CHECK(types.contains(FieldType::Dropdown) == row.dropdown);
        CHECK(types.contains(FieldType::Description) == row.description);
        CHECK(types.contains(FieldType::FileUpload) == row.file);
        CHECK(types.contains(FieldType::MultipleChoice) == row.multi);
        CHECK(types.contains(FieldType::CheckboxInput) == row.checkbox);
        CHECK(types.contains(FieldType::NumericInput) == row.numeric);
        fields += row.fields;
        pairs += row.pairs_per_sample * 50;
    }
    CHECK(fields == 279);
    CHECK(pairs == 13800);
}

TEST_CASE("catalog spans eight domain categories and validates") {
    std::set<std::string> domains;
    std::set<std::string> ids;
    for (const auto& form : builtin_catalog()) {
        domains.insert(form.domain_category);
        ids.insert(form.form_id);
        const ValidationReport report = validate_schema(form);
        CAPTURE(form.form_id);
        CHECK(report.ok);
    }
    CHECK(domains.size() == 8);
    CHECK(ids.size() == 25);
}

TEST_CASE("catalog lookups by known examples") {
    const FormSchema* startup = by_name("Startup Funding Application");
    REQUIRE(startup);
    CHECK(startup->fields.size() == 18);
    std::set<FieldType> types;
    for (const auto& f : startup->fields) types.insert(f.field_type);
    CHECK(types.size() == 6);

    const FormSchema* scholarship = by_name("Scholarship Application for Students");
    REQUIRE(scholarship);
    CHECK(scholarship->fields.size() == 16);
    CHECK(scholarship->page_count > 1);
}

TEST_CASE("schema documents round-trip through serialization") {
    for (const auto& form : builtin_catalog()) {
        CHECK(load_form_schema(serialize_form_schema(form)) == form);
    }
}

TEST_CASE("catalog directory round-trip keeps the catalog hash") {
    const auto dir = std::filesystem::temp_directory_path() / "formgym_catalog_rt";
    std::filesystem::remove_all(dir);
    write_catalog_dir(builtin_catalog(), dir.string());
    const auto loaded = load_catalog_dir(dir.string());
    CHECK(catalog_hash(loaded) == catalog_hash(builtin_catalog()));
    std::filesystem::remove_all(dir);
}

TEST_CASE("validation: single StringInput form is clean") {
    const FormSchema form = make_form("one", nlohmann::json::array({{{"id", "a"}, {"type", "StringInput"}}}));
    const ValidationReport report = validate_schema(form);
    CHECK(report.ok);
    CHECK(report.issues.empty());
}

TEST_CASE("validation: drop-down without options yields one issue") {
    FormSchema form = make_form("one", nlohmann::json::array({{{"id", "a"}, {"type", "StringInput"}}}));
    form.fields[0].field_type = FieldType::Dropdown;
    const ValidationReport report = validate_schema(form);
    CHECK_FALSE(report.ok);
    CHECK(report.issues.size() == 1);
}

TEST_CASE("validation: second page without fields yields one issue") {
    FormSchema form = make_form("two", nlohmann::json::array({{{"id", "a"}, {"type", "StringInput"}},
                                                              {{"id", "b"}, {"type", "StringInput"}}}));
    form.page_count = 2;
    const ValidationReport report = validate_schema(form);
    CHECK_FALSE(report.ok);
    CHECK(report.issues.size() == 1);
}

TEST_CASE("loading rejects duplicate ids and empty forms") {
    nlohmann::json doc = nlohmann::json::parse(serialize_form_schema(
        make_form("dup", nlohmann::json::array({{{"id", "a"}, {"type", "StringInput"}},
                                                {{"id", "b"}, {"type", "StringInput"}}}))));
    doc["fields"][1]["field_id"] = "a";
    CHECK_THROWS_AS(load_form_schema(doc.dump()), InvariantViolation);
    doc["fields"] = nlohmann::json::array();
    CHECK_THROWS_AS(load_form_schema(doc.dump()), InvariantViolation);
    CHECK_THROWS_AS(load_form_schema("{not json"), Error);
}

TEST_CASE("paginate splits long forms into pages of bounded size") {
    nlohmann::json fields = nlohmann::json::array();
    for (int i = 0; i < 23; ++i) fields.push_back({{"id", "f" + std::to_string(i)}, {"type", "StringInput"}});
    FormSchema form = make_form("long", fields);
    paginate(form, 10);
    CHECK(form.page_count == 3);
    for (int p = 0; p < form.page_count; ++p) CHECK(form.fields_on_page(p).size() <= 10);
    CHECK(validate_schema(form).ok);
}
