#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "formgym/random.hpp"
#include "formgym/record.hpp"
#include "formgym/schema.hpp"

namespace formgym {

/// External free-text generator. Implementations throw
/// Error(GeneratorUnavailable) on transport failure.
class TextGenerator {
public:
    virtual ~TextGenerator() = default;
    virtual std::string generate(const std::string& prompt) = 0;
};

inline constexpr std::string_view kGenerationPromptVersion = "context-v1";
/// Domain used for every generated email address.
inline constexpr std::string_view kPlaceholderEmailDomain = "example.org";

ValueMap sample_gold_values(const FormSchema& schema, RandomStream& stream);

/// Prompt sent to an external generator for one sample.
std::string generation_prompt(const FormSchema& schema, const ValueMap& gold);

std::string templated_document(const FormSchema& schema, const ValueMap& gold, RandomStream& stream);

/// Scored fields whose canonical gold value does not occur verbatim in `text`.
std::vector<std::string> missing_values(const FormSchema& schema, const ValueMap& gold,
                                        std::string_view text);

/// Appends one sentence per missing value so every gold value is contained.
std::string enforce_containment(const FormSchema& schema, const ValueMap& gold, std::string text);

/// Uses `generator` when given (and lets its GeneratorUnavailable propagate),
/// otherwise the deterministic template. The result always satisfies containment.
std::string generate_context_document(const FormSchema& schema, const ValueMap& gold,
                                      RandomStream& stream, TextGenerator* generator = nullptr);

/// Paper-metadata records: flat string maps with keys title, authors, abstract,
/// keywords, email, track and an optional full-text `body`.
using MetadataRecord = ValueMap;

inline constexpr std::string_view kPaperSubmissionFormId = "paper_submission";

std::vector<GoldRecord> ingest_metadata_records(const std::vector<MetadataRecord>& records,
                                                const FormSchema& paper_form);
std::vector<MetadataRecord> read_metadata_jsonl(const std::string& path);

struct Dataset {
    std::vector<GoldRecord> records;
    std::string catalog_hash;
    std::uint64_t seed = 0;
    int per_form_count = 0;

    const GoldRecord* find(std::string_view sample_id) const;
    std::vector<const GoldRecord*> for_form(std::string_view form_id) const;
    std::size_t pair_count() const;
};

std::string sample_id_for(std::string_view form_id, int sample_index);

/// Sample `sample_index` of `schema`; depends only on (seed, form_id, index).
GoldRecord build_sample(const FormSchema& schema, int sample_index, std::uint64_t seed,
                        TextGenerator* generator = nullptr);

/// `per_form_count` samples per form. A failing generator falls back to the
/// template for that sample. `jobs` > 1 builds samples on worker threads.
Dataset build_dataset(const std::vector<FormSchema>& catalog, int per_form_count, std::uint64_t seed,
                      TextGenerator* generator = nullptr, int jobs = 1);

/// Replaces the samples of the paper-submission form with ingested records
/// (up to per_form_count of them).
void substitute_ingested(Dataset& dataset, std::vector<GoldRecord> ingested);

std::string serialize_record(const GoldRecord& record);
GoldRecord parse_record(std::string_view line);

std::string dataset_to_jsonl(const Dataset& dataset);
/// Writes `<path>` (records) and `<path>.meta.json` (seed, catalog hash, count).
void write_dataset(const Dataset& dataset, const std::string& path);
Dataset read_dataset(const std::string& path);

/// Gold invariant check: keys equal the scored fields and values are canonical.
std::vector<std::string> check_record(const FormSchema& schema, const GoldRecord& record);

}  // namespace formgym
