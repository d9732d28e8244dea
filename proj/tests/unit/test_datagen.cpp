#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "formgym/datagen.hpp"
#include "formgym/error.hpp"
#include "formgym/values.hpp"

using namespace formgym;

namespace {

const FormSchema& form(std::string_view id) {
    const FormSchema* f = find_form(builtin_catalog(), id);
    REQUIRE(f);
    return *f;
}

// Returns a fixed text that leaves out one chosen value.
class OmittingGenerator : public TextGenerator {
public:
    explicit OmittingGenerator(std::string text) : text_(std::move(text)) {}
    std::string generate(const std::string&) override { return text_; }

private:
    std::string text_;
};

class FailingGenerator : public TextGenerator {
public:
    std::string generate(const std::string&) override {
        throw Error(ErrorCode::GeneratorUnavailable, "offline");
    }
};

MetadataRecord paper(int i) {
    return {{"title", "Sparse Routing for Tabular Agents " + std::to_string(i)},
            {"authors", "Ada Park, Lin Osei"},
            {"abstract", "We study routing in tabular agents and report gains on three suites."},
            {"keywords", "routing, agents"},
            {"email", "ada.park" + std::to_string(i) + "@example.org"},
            {"track", "Main Track"}};
}

}  // namespace

TEST_CASE("gold values respect ranges and option sets") {
    for (const auto& schema : builtin_catalog()) {
        for (std::uint64_t k = 0; k < 20; ++k) {
            RandomStream rng = derive_stream(5, schema.form_id, k);
            const ValueMap gold = sample_gold_values(schema, rng);
            CHECK(gold.size() == schema.scored_count());
            for (const FieldSpec* f : schema.scored_fields()) {
                const std::string& v = gold.at(f->field_id);
                CAPTURE(f->field_id);
                CHECK(is_canonical(*f, v));
                if (f->field_type == FieldType::NumericInput && f->numeric_range) {
                    const double d = to_double(*parse_decimal(v));
                    CHECK(d >= f->numeric_range->min);
                    CHECK(d <= f->numeric_range->max);
                }
                if (f->field_type == FieldType::BinaryChoice || f->field_type == FieldType::Dropdown) {
                    CHECK(std::find(f->options.begin(), f->options.end(), v) != f->options.end());
                }
                if (f->field_type == FieldType::Date) CHECK(parse_date(v).has_value());
            }
        }
    }
}

TEST_CASE("gold sampling is deterministic per seed") {
    const FormSchema& startup = form("startup_funding");
    RandomStream a(42);
    RandomStream b(42);
    CHECK(sample_gold_values(startup, a) == sample_gold_values(startup, b));
    RandomStream c(43);
    RandomStream d(42);
    CHECK_FALSE(sample_gold_values(startup, c) == sample_gold_values(startup, d));
}

TEST_CASE("templated documents contain every gold value and are reproducible") {
    for (const auto& schema : builtin_catalog()) {
        const GoldRecord a = build_sample(schema, 3, 99);
        const GoldRecord b = build_sample(schema, 3, 99);
        CHECK(a == b);
        CHECK(missing_values(schema, a.gold, a.context_document).empty());
        CHECK(check_record(schema, a).empty());
    }
}

TEST_CASE("containment pass appends what a generator left out") {
    const FormSchema& startup = form("startup_funding");
    RandomStream rng(1);
    const ValueMap gold = sample_gold_values(startup, rng);
    // Mention every value but the company name.
    std::string text;
    for (const auto& [field, value] : gold) {
        if (field != "company_name") text += value + ". ";
    }
    REQUIRE(gold.count("company_name"));
    CHECK(missing_values(startup, gold, text) == std::vector<std::string>{"company_name"});
    OmittingGenerator generator(text);
    RandomStream doc_rng(2);
    const std::string document = generate_context_document(startup, gold, doc_rng, &generator);
    CHECK(missing_values(startup, gold, document).empty());
    CHECK(document.find(gold.at("company_name")) != std::string::npos);
}

TEST_CASE("generator failure propagates, but dataset builds fall back to templates") {
    const FormSchema& bank = form("bank_account");
    RandomStream rng(1);
    const ValueMap gold = sample_gold_values(bank, rng);
    FailingGenerator failing;
    RandomStream doc_rng(2);
    CHECK_THROWS_AS(generate_context_document(bank, gold, doc_rng, &failing), Error);
    const GoldRecord with_fallback = build_sample(bank, 0, 7, &failing);
    CHECK(with_fallback == build_sample(bank, 0, 7));
    CHECK(with_fallback.provenance == Provenance::Templated);
}

TEST_CASE("metadata records map onto the paper submission form") {
    const FormSchema& paper_form = form(kPaperSubmissionFormId);
    std::vector<MetadataRecord> records;
    for (int i = 0; i < 50; ++i) records.push_back(paper(i));
    const auto gold = ingest_metadata_records(records, paper_form);
    REQUIRE(gold.size() == 50);
    CHECK(gold[0].form_id == "paper_submission");
    CHECK(gold[0].provenance == Provenance::Ingested);
    CHECK(gold[0].gold.at("paper_title") == "Sparse Routing for Tabular Agents 0");
    CHECK(gold[0].gold.at("contact_email") == "ada.park0@example.org");
    for (const auto& g : gold) {
        CHECK(check_record(paper_form, g).empty());
        CHECK(missing_values(paper_form, g.gold, g.context_document).empty());
    }

    MetadataRecord broken = paper(0);
    broken.erase("abstract");
    try {
        ingest_metadata_records({broken}, paper_form);
        FAIL("expected MissingField");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::MissingField);
    }
}

TEST_CASE("bundled metadata sample ingests cleanly") {
    const std::string path = std::string(FORMGYM_SOURCE_DIR) + "/data/paper_metadata_sample.jsonl";
    const auto records = read_metadata_jsonl(path);
    CHECK(records.size() == 50);
    const auto gold = ingest_metadata_records(records, form(kPaperSubmissionFormId));
    CHECK(gold.size() == 50);
}

TEST_CASE("dataset accounting and persistence") {
    const Dataset small = build_dataset(builtin_catalog(), 2, 42);
    CHECK(small.records.size() == 50);
    CHECK(small.catalog_hash == catalog_hash(builtin_catalog()));
    CHECK(dataset_to_jsonl(small) == dataset_to_jsonl(build_dataset(builtin_catalog(), 2, 42, nullptr, 3)));

    const auto path = (std::filesystem::temp_directory_path() / "formgym_ds_unit.jsonl").string();
    write_dataset(small, path);
    const Dataset loaded = read_dataset(path);
    CHECK(loaded.records == small.records);
    CHECK(loaded.seed == 42);
    CHECK(loaded.per_form_count == 2);
    CHECK(loaded.catalog_hash == small.catalog_hash);
    for (const auto& r : small.records) CHECK(parse_record(serialize_record(r)) == r);
    std::filesystem::remove(path);
    std::filesystem::remove(path + ".meta.json");
}

TEST_CASE("ingested samples replace the paper submission slice") {
    Dataset ds = build_dataset(builtin_catalog(), 3, 42);
    std::vector<MetadataRecord> records;
    for (int i = 0; i < 5; ++i) records.push_back(paper(i));
    substitute_ingested(ds, ingest_metadata_records(records, form(kPaperSubmissionFormId)));
    const auto slice = ds.for_form(kPaperSubmissionFormId);
    REQUIRE(slice.size() == 3);
    for (const GoldRecord* r : slice) CHECK(r->provenance == Provenance::Ingested);
    CHECK(ds.records.size() == 75);
}

TEST_CASE("typed gold values are unique within a record") {
    const Dataset ds = build_dataset(builtin_catalog(), 5, 8);
    for (const auto& r : ds.records) {
        const FormSchema* schema = find_form(builtin_catalog(), r.form_id);
        std::set<std::string> seen;
        for (const FieldSpec* f : schema->scored_fields()) {
            if (!is_typed(f->field_type)) continue;
            CAPTURE(r.sample_id);
            CHECK(seen.insert(r.gold.at(f->field_id)).second);
        }
    }
}
