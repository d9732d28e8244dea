#include "formgym/datagen.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <set>
#include <thread>

#include <nlohmann/json.hpp>

#include "formgym/error.hpp"
#include "formgym/values.hpp"
#include "wordlists.hpp"

namespace formgym {

namespace w = words;

namespace {

std::string digits(RandomStream& s, int n) {
    std::string out;
    for (int i = 0; i < n; ++i) out += static_cast<char>('0' + s.below(10));
    return out;
}

std::string letters(RandomStream& s, int n) {
    std::string out;
    for (int i = 0; i < n; ++i) out += static_cast<char>('A' + s.below(26));
    return out;
}

std::string capitalize(std::string s) {
    if (!s.empty() && s[0] >= 'a' && s[0] <= 'z') s[0] = static_cast<char>(s[0] - 'a' + 'A');
    return s;
}

std::string title_case(std::string s) {
    bool start = true;
    for (char& c : s) {
        if (start && c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
        start = c == ' ';
    }
    return s;
}

std::string person_name(RandomStream& s) { return s.pick(w::kFirstNames) + " " + s.pick(w::kLastNames); }

std::string string_value(const std::string& hint, RandomStream& s) {
    if (hint == "person_name") return person_name(s);
    if (hint == "email") {
        return ascii_lower(s.pick(w::kFirstNames) + "." + s.pick(w::kLastNames)) + digits(s, 2) + "@" +
               std::string(kPlaceholderEmailDomain);
    }
    if (hint == "phone") return "+1-555-" + digits(s, 3) + "-" + digits(s, 4);
    if (hint == "company") return s.pick(w::kCompanyStems) + " " + s.pick(w::kCompanySuffixes);
    if (hint == "street_address") return std::to_string(s.between(1, 999)) + " " + s.pick(w::kStreets);
    if (hint == "job_title") return s.pick(w::kJobTitles);
    if (hint == "academic_position") return s.pick(w::kAcademicPositions);
    if (hint == "url") return "https://www." + ascii_lower(s.pick(w::kCompanyStems)) + digits(s, 2) + ".example.com";
    if (hint == "city") return s.pick(w::kCities);
    if (hint == "country") return s.pick(w::kCountries);
    if (hint == "postal_code") return digits(s, 5);
    if (hint == "student_id") return "S" + digits(s, 7);
    if (hint == "employee_id") return "E-" + digits(s, 5);
    if (hint == "asset_tag") return "AT-" + digits(s, 6);
    if (hint == "extension") return std::to_string(s.between(1000, 9999));
    if (hint == "major") return s.pick(w::kMajors);
    if (hint == "university") return s.pick(w::kUniversities);
    if (hint == "department") return s.pick(w::kDepartments);
    if (hint == "component") return s.pick(w::kComponents);
    if (hint == "version") {
        return "v" + std::to_string(s.between(1, 9)) + "." + std::to_string(s.between(0, 20)) + "." +
               std::to_string(s.between(0, 9));
    }
    if (hint == "term") return s.pick(w::kTerms) + " " + std::to_string(s.between(2025, 2028));
    if (hint == "gpa") return "3." + digits(s, 2);
    if (hint == "tax_id") return digits(s, 2) + "-" + digits(s, 7);
    if (hint == "license_plate") return letters(s, 3) + "-" + digits(s, 4);
    if (hint == "license_number") return "DL-" + digits(s, 8);
    if (hint == "policy_number") return "POL-" + digits(s, 8);
    if (hint == "project_reference") return "PRJ-" + std::to_string(s.between(2024, 2027)) + "-" + digits(s, 4);
    if (hint == "part_number") return "PN-" + digits(s, 5) + "-" + letters(s, 1);
    if (hint == "diagnosis_code") return letters(s, 1) + digits(s, 2) + "." + digits(s, 1);
    if (hint == "doctor_name") return "Dr. " + person_name(s);
    if (hint == "procedure") return s.pick(w::kProcedures);
    if (hint == "provider") return s.pick(w::kProviders);
    if (hint == "bank") return s.pick(w::kBanks);
    if (hint == "product") return s.pick(w::kProducts);
    if (hint == "referral_source") return s.pick(w::kReferralSources);
    if (hint == "talk_title" || hint == "paper_title" || hint == "project_title") {
        return s.pick(w::kMethods) + " " + title_case(s.pick(w::kAdjectives) + " " + s.pick(w::kNouns));
    }
    if (hint == "artwork_title" || hint == "literary_title") {
        return s.pick(w::kArtAdjectives) + " " + s.pick(w::kArtNouns);
    }
    if (hint == "pen_name") return s.pick(w::kFirstNames) + " " + s.pick(w::kArtNouns);
    if (hint == "author_list") {
        const int n = static_cast<int>(s.between(2, 4));
        std::string out;
        for (int i = 0; i < n; ++i) out += (i ? ", " : "") + person_name(s);
        return out;
    }
    if (hint == "keywords") {
        return s.pick(w::kAdjectives) + " " + s.pick(w::kNouns) + ", " + s.pick(w::kNouns) + ", " + s.pick(w::kNouns);
    }
    if (hint == "abstract") {
        return "We study " + s.pick(w::kAdjectives) + " " + s.pick(w::kNouns) + " and show that " +
               s.pick(w::kDetails) + ".";
    }
    if (hint == "bug_title") return s.pick(w::kComponents) + " " + s.pick(w::kBugVerbs) + " " + s.pick(w::kBugTriggers);
    return capitalize(s.pick(w::kAdjectives) + " " + s.pick(w::kNouns));
}

std::string topic_of(const std::string& hint) {
    std::string topic = hint;
    std::replace(topic.begin(), topic.end(), '_', ' ');
    return topic;
}

std::string description_value(const std::string& hint, RandomStream& s) {
    const std::string topic = topic_of(hint.empty() ? "request" : hint);
    std::string out;
    switch (s.below(3)) {
        case 0:
            out = "My " + topic + " focuses on " + s.pick(w::kAdjectives) + " " + s.pick(w::kNouns) + " because " +
                  s.pick(w::kMotives) + ".";
            break;
        case 1:
            out = "This " + topic + " concerns " + s.pick(w::kAdjectives) + " " + s.pick(w::kNouns) + ", and " +
                  s.pick(w::kDetails) + ".";
            break;
        default:
            out = "In short, " + s.pick(w::kDetails) + " while working on " + s.pick(w::kAdjectives) + " " +
                  s.pick(w::kNouns) + ".";
    }
    const int extra = static_cast<int>(s.below(3));
    if (extra >= 1) {
        std::string detail = s.pick(w::kDetails);
        while (out.find(detail) != std::string::npos) detail = s.pick(w::kDetails);
        out += " " + capitalize(detail) + ".";
    }
    if (extra >= 2) out += " " + s.pick(w::kClosers);
    return out;
}

std::string numeric_value(const FieldSpec& field, RandomStream& s) {
    const NumericRange range = field.numeric_range.value_or(NumericRange{0, 1000});
    if (field.value_hint == "money" || field.value_hint == "decimal") {
        const auto lo = static_cast<std::int64_t>(std::ceil(range.min * 100));
        const auto hi = static_cast<std::int64_t>(std::floor(range.max * 100));
        return format_decimal(Decimal{s.between(lo, hi)});
    }
    const auto lo = static_cast<std::int64_t>(std::ceil(range.min));
    const auto hi = static_cast<std::int64_t>(std::floor(range.max));
    return std::to_string(s.between(lo, hi));
}

std::string date_value(RandomStream& s) {
    // Uniform over days of 2015-01-01 .. 2030-12-31.
    int total = 0;
    for (int y = 2015; y <= 2030; ++y) total += is_leap_year(y) ? 366 : 365;
    int k = static_cast<int>(s.below(static_cast<std::uint64_t>(total)));
    CivilDate d{2015, 1, 1};
    while (k >= days_in_month(d.year, d.month)) {
        k -= days_in_month(d.year, d.month);
        d = add_months(d, 1);
    }
    d.day = k + 1;
    return format_date(d);
}

std::string file_value(const FieldSpec& field, RandomStream& s) {
    const std::string& hint = field.value_hint;
    std::string ext = "pdf";
    if (hint == "photo" || hint == "photo_id" || hint == "artwork_image") ext = "jpg";
    if (hint == "screenshot") ext = "png";
    if (hint == "log_file") ext = "log";
    if (hint == "cad_file") ext = "dwg";
    if (hint == "pitch_deck") ext = "pptx";
    if (hint == "financials") ext = "xlsx";
    const std::string base = hint.empty() ? field.field_id : hint;
    return "/home/" + ascii_lower(s.pick(w::kFirstNames)) + "/documents/" + base + "_" + digits(s, 3) + "." + ext;
}

std::string gold_value(const FieldSpec& field, RandomStream& s) {
    switch (field.field_type) {
        case FieldType::StringInput: return string_value(field.value_hint, s);
        case FieldType::Description: return description_value(field.value_hint, s);
        case FieldType::NumericInput: return numeric_value(field, s);
        case FieldType::Date: return date_value(s);
        case FieldType::FileUpload: return file_value(field, s);
        case FieldType::CheckboxInput: return std::string(kCheckedValue);
        case FieldType::Dropdown:
        case FieldType::BinaryChoice: return field.options[s.below(field.options.size())];
        case FieldType::MultipleChoice: {
            const int n = static_cast<int>(field.options.size());
            const int k = static_cast<int>(s.between(1, std::min(3, n)));
            std::vector<int> order(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
            for (int i = 0; i < k; ++i) std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(i) + s.below(static_cast<std::uint64_t>(n - i))]);
            std::set<int> chosen(order.begin(), order.begin() + k);
            std::string out;
            for (int i : chosen) out += (out.empty() ? "" : ";") + field.options[static_cast<std::size_t>(i)];
            return out;
        }
    }
    return {};
}

// "Annual Revenue (USD)" reads as "annual revenue" inside a sentence.
std::string lower_label(const FieldSpec& field) {
    std::string label = field.label;
    if (auto paren = label.find(" ("); paren != std::string::npos) label.erase(paren);
    return ascii_lower(label);
}

std::string join_list(const std::vector<std::string>& items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) out += i + 1 == items.size() ? " and " : ", ";
        out += items[i];
    }
    return out;
}

// One sentence that states the gold value verbatim.
std::string value_sentence(const FieldSpec& field, const std::string& value, RandomStream& s) {
    const std::string label = lower_label(field);
    switch (field.field_type) {
        case FieldType::Description:
            return field.label + ":\n" + value;
        case FieldType::CheckboxInput:
            return "The box \"" + field.label + "\" should be checked.";
        case FieldType::MultipleChoice:
            return "For " + label + ", I would like " + join_list(split_multi(value)) + ".";
        case FieldType::FileUpload:
            return "The " + label + " is saved at " + value + " on my computer.";
        case FieldType::Date:
            return s.chance(0.5) ? "The " + label + " is " + value + "." : field.label + ": " + value + ".";
        default:
            break;
    }
    switch (s.below(4)) {
        case 0: return "My " + label + " is " + value + ".";
        case 1: return field.label + ": " + value + ".";
        case 2: return "Please use " + value + " for the " + label + ".";
        default: return "For the " + label + ", the answer is " + value + ".";
    }
}

std::vector<const FieldSpec*> shuffled_scored(const FormSchema& schema, RandomStream& s) {
    std::vector<const FieldSpec*> fields = schema.scored_fields();
    for (std::size_t i = fields.size(); i > 1; --i) std::swap(fields[i - 1], fields[s.below(i)]);
    return fields;
}

std::string resume_document(const FormSchema& schema, const ValueMap& gold, RandomStream& s) {
    auto value = [&](const std::string& id) {
        auto it = gold.find(id);
        return it == gold.end() ? std::string() : it->second;
    };
    std::ostringstream out;
    const std::string name = value("full_name");
    out << "# " << (name.empty() ? "Curriculum Vitae" : name) << "\n\n";
    out << "## Contact\n";
    std::vector<const FieldSpec*> rest;
    for (const FieldSpec* f : schema.scored_fields()) {
        if (f->field_id == "full_name") continue;
        if (f->value_hint == "email" || f->value_hint == "phone" || f->value_hint == "street_address") {
            out << "- " << f->label << ": " << value(f->field_id) << "\n";
        } else {
            rest.push_back(f);
        }
    }
    if (!name.empty()) out << "- Full Name: " << name << "\n";
    out << "\n## Experience\n";
    const int jobs = static_cast<int>(s.between(2, 3));
    int year = static_cast<int>(s.between(2016, 2019));
    for (int i = 0; i < jobs; ++i) {
        const int end = year + static_cast<int>(s.between(1, 3));
        out << "- " << year << "-" << end << ": " << s.pick(w::kJobTitles) << " at " << s.pick(w::kCompanyStems)
            << " " << s.pick(w::kCompanySuffixes) << ". " << capitalize(s.pick(w::kDetails)) << ".\n";
        year = end;
    }
    out << "\n## Education\n- " << s.pick(w::kMajors) << ", " << s.pick(w::kUniversities) << "\n";
    out << "\n## Application\n";
    for (const FieldSpec* f : rest) out << value_sentence(*f, value(f->field_id), s) << "\n\n";
    std::string text = out.str();
    while (!text.empty() && text.back() == '\n') text.pop_back();
    return text + "\n";
}

std::string email_for(const std::string& person, RandomStream& s) {
    std::string local = ascii_lower(person);
    std::replace(local.begin(), local.end(), ' ', '.');
    return local + digits(s, 2) + "@" + std::string(kPlaceholderEmailDomain);
}

bool is_typed_value(FieldType type) {
    return type == FieldType::StringInput || type == FieldType::Description || type == FieldType::NumericInput ||
           type == FieldType::Date || type == FieldType::FileUpload;
}

}  // namespace

std::string_view provenance_name(Provenance provenance) {
    switch (provenance) {
        case Provenance::Templated: return "templated";
        case Provenance::LlmGenerated: return "llm_generated";
        case Provenance::Ingested: return "ingested";
    }
    return "?";
}

std::optional<Provenance> parse_provenance(std::string_view name) {
    for (Provenance p : {Provenance::Templated, Provenance::LlmGenerated, Provenance::Ingested}) {
        if (provenance_name(p) == name) return p;
    }
    return std::nullopt;
}

ValueMap sample_gold_values(const FormSchema& schema, RandomStream& stream) {
    ValueMap gold;
    std::set<std::string> typed;
    std::string first_name;
    for (const FieldSpec* field : schema.scored_fields()) {
        std::string value = gold_value(*field, stream);
        if (field->value_hint == "email" && !first_name.empty()) value = email_for(first_name, stream);
        // Typed values stay distinct within a record so typed text can be
        // traced back to one field.
        for (int attempt = 0; is_typed_value(field->field_type) && typed.contains(value) && attempt < 32; ++attempt) {
            value = gold_value(*field, stream);
        }
        if (is_typed_value(field->field_type)) typed.insert(value);
        if (field->value_hint == "person_name" && first_name.empty()) first_name = value;
        gold[field->field_id] = std::move(value);
    }
    return gold;
}

std::string generation_prompt(const FormSchema& schema, const ValueMap& gold) {
    std::ostringstream out;
    out << "[prompt " << kGenerationPromptVersion << "]\n"
        << "Write a natural first-person description, as a person would jot down before filling in the \""
        << schema.name << "\". Mention every value below exactly as written, character for character, "
        << "without listing them as a table. Do not add other names, emails or numbers.\n\n";
    for (const FieldSpec* f : schema.scored_fields()) {
        auto it = gold.find(f->field_id);
        if (it == gold.end()) continue;
        out << "- " << f->label << ": " << it->second << "\n";
    }
    return out.str();
}

std::string templated_document(const FormSchema& schema, const ValueMap& gold, RandomStream& stream) {
    if (schema.form_id.starts_with("job_application")) return resume_document(schema, gold, stream);
    std::ostringstream out;
    out << "Notes for the " << schema.name << ".\n\n";
    std::vector<std::string> paragraph;
    auto flush = [&] {
        if (paragraph.empty()) return;
        for (std::size_t i = 0; i < paragraph.size(); ++i) out << (i ? " " : "") << paragraph[i];
        out << "\n\n";
        paragraph.clear();
    };
    for (const FieldSpec* f : shuffled_scored(schema, stream)) {
        auto it = gold.find(f->field_id);
        if (it == gold.end()) continue;
        const std::string sentence = value_sentence(*f, it->second, stream);
        if (f->field_type == FieldType::Description) {
            flush();
            out << sentence << "\n\n";
            continue;
        }
        paragraph.push_back(sentence);
        if (paragraph.size() >= 3) flush();
    }
    flush();
    std::string text = out.str();
    while (!text.empty() && text.back() == '\n') text.pop_back();
    return text + "\n";
}

std::vector<std::string> missing_values(const FormSchema& schema, const ValueMap& gold, std::string_view text) {
    std::vector<std::string> missing;
    for (const FieldSpec* f : schema.scored_fields()) {
        auto it = gold.find(f->field_id);
        if (it == gold.end()) continue;
        bool ok = true;
        if (f->field_type == FieldType::MultipleChoice) {
            for (const auto& part : split_multi(it->second)) ok = ok && text.find(part) != std::string_view::npos;
        } else {
            ok = text.find(it->second) != std::string_view::npos;
        }
        if (!ok) missing.push_back(f->field_id);
    }
    return missing;
}

std::string enforce_containment(const FormSchema& schema, const ValueMap& gold, std::string text) {
    const auto missing = missing_values(schema, gold, text);
    if (missing.empty()) return text;
    while (!text.empty() && text.back() == '\n') text.pop_back();
    text += "\n\n";
    for (std::size_t i = 0; i < missing.size(); ++i) {
        const FieldSpec& f = *schema.find_field(missing[i]);
        const std::string& value = gold.at(missing[i]);
        if (f.field_type == FieldType::MultipleChoice) {
            text += "For " + lower_label(f) + ", I would like " + join_list(split_multi(value)) + ".";
        } else if (f.field_type == FieldType::CheckboxInput) {
            text += "The box \"" + f.label + "\" should be checked.";
        } else {
            text += "The " + lower_label(f) + " is " + value + ".";
        }
        text += i + 1 == missing.size() ? "\n" : " ";
    }
    return text;
}

std::string generate_context_document(const FormSchema& schema, const ValueMap& gold, RandomStream& stream,
                                      TextGenerator* generator) {
    for (const FieldSpec* f : schema.scored_fields()) {
        if (!gold.contains(f->field_id)) {
            throw Error(ErrorCode::MissingField, "gold lacks scored field '" + f->field_id + "'");
        }
    }
    std::string text = generator ? generator->generate(generation_prompt(schema, gold))
                                 : templated_document(schema, gold, stream);
    return enforce_containment(schema, gold, std::move(text));
}

std::vector<GoldRecord> ingest_metadata_records(const std::vector<MetadataRecord>& records, const FormSchema& paper_form) {
    // Metadata key for each scored field of the paper-submission form.
    static const std::map<std::string, std::string> kKeyFor = {
        {"paper_title", "title"}, {"authors", "authors"}, {"abstract", "abstract"},
        {"keywords", "keywords"}, {"contact_email", "email"}, {"track", "track"}};
    std::vector<GoldRecord> out;
    for (std::size_t i = 0; i < records.size(); ++i) {
        const MetadataRecord& rec = records[i];
        GoldRecord g;
        g.form_id = paper_form.form_id;
        g.sample_id = paper_form.form_id + "-ingested-" + std::to_string(i);
        g.provenance = Provenance::Ingested;
        for (const FieldSpec* f : paper_form.scored_fields()) {
            auto key = kKeyFor.find(f->field_id);
            const std::string meta_key = key == kKeyFor.end() ? f->field_id : key->second;
            auto it = rec.find(meta_key);
            if (it == rec.end() || normalize_space(it->second).empty()) {
                throw Error(ErrorCode::MissingField,
                            "metadata record " + std::to_string(i) + " lacks '" + meta_key + "'");
            }
            const std::string value = canonicalize_string(*f, it->second);
            if (has_options(f->field_type) &&
                std::find(f->options.begin(), f->options.end(), value) == f->options.end()) {
                throw Error(ErrorCode::InvalidFieldValue,
                            "metadata record " + std::to_string(i) + " has unknown " + meta_key + " '" + value + "'");
            }
            g.gold[f->field_id] = value;
        }
        std::string body;
        if (auto it = rec.find("body"); it != rec.end()) {
            body = it->second;
        } else {
            body = rec.at("title") + "\n\n" + rec.at("authors") + "\n\nAbstract. " + rec.at("abstract") + "\n";
        }
        g.context_document = enforce_containment(paper_form, g.gold, body);
        out.push_back(std::move(g));
    }
    return out;
}

std::vector<MetadataRecord> read_metadata_jsonl(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
    std::vector<MetadataRecord> out;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (normalize_space(line).empty()) continue;
        try {
            const auto j = nlohmann::json::parse(line);
            MetadataRecord rec;
            for (auto& [key, value] : j.items()) {
                if (value.is_string()) {
                    rec[key] = value.get<std::string>();
                } else if (value.is_array()) {
                    std::string joined;
                    for (const auto& item : value) joined += (joined.empty() ? "" : ", ") + item.get<std::string>();
                    rec[key] = joined;
                } else {
                    throw Error(ErrorCode::MalformedDocument, "key '" + key + "' must be a string or list");
                }
            }
            out.push_back(std::move(rec));
        } catch (const nlohmann::json::exception& e) {
            throw Error(ErrorCode::MalformedDocument, path + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }
    return out;
}

const GoldRecord* Dataset::find(std::string_view sample_id) const {
    for (const auto& r : records) {
        if (r.sample_id == sample_id) return &r;
    }
    return nullptr;
}

std::vector<const GoldRecord*> Dataset::for_form(std::string_view form_id) const {
    std::vector<const GoldRecord*> out;
    for (const auto& r : records) {
        if (r.form_id == form_id) out.push_back(&r);
    }
    return out;
}

std::size_t Dataset::pair_count() const {
    std::size_t n = 0;
    for (const auto& r : records) n += r.gold.size();
    return n;
}

std::string sample_id_for(std::string_view form_id, int sample_index) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%03d", sample_index);
    return std::string(form_id) + "-" + buf;
}

GoldRecord build_sample(const FormSchema& schema, int sample_index, std::uint64_t seed, TextGenerator* generator) {
    RandomStream stream = derive_stream(seed, schema.form_id, static_cast<std::uint64_t>(sample_index));
    GoldRecord record;
    record.sample_id = sample_id_for(schema.form_id, sample_index);
    record.form_id = schema.form_id;
    record.gold = sample_gold_values(schema, stream);
    record.provenance = Provenance::Templated;
    if (generator) {
        RandomStream unused = stream;
        try {
            record.context_document = generate_context_document(schema, record.gold, unused, generator);
            record.provenance = Provenance::LlmGenerated;
            return record;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::GeneratorUnavailable) throw;
        }
    }
    record.context_document = generate_context_document(schema, record.gold, stream, nullptr);
    return record;
}

Dataset build_dataset(const std::vector<FormSchema>& catalog, int per_form_count, std::uint64_t seed,
                      TextGenerator* generator, int jobs) {
    if (per_form_count < 1) throw Error(ErrorCode::InvalidArgument, "per_form_count must be at least 1");
    Dataset dataset;
    dataset.catalog_hash = catalog_hash(catalog);
    dataset.seed = seed;
    dataset.per_form_count = per_form_count;
    const std::size_t total = catalog.size() * static_cast<std::size_t>(per_form_count);
    dataset.records.resize(total);
    auto build_one = [&](std::size_t k) {
        const FormSchema& schema = catalog[k / static_cast<std::size_t>(per_form_count)];
        dataset.records[k] = build_sample(schema, static_cast<int>(k % static_cast<std::size_t>(per_form_count)),
                                          seed, generator);
    };
    // An external generator is a shared client, so it runs on one thread.
    const int workers = generator ? 1 : std::max(1, jobs);
    if (workers == 1) {
        for (std::size_t k = 0; k < total; ++k) build_one(k);
        return dataset;
    }
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) {
        threads.emplace_back([&, t] {
            try {
                for (std::size_t k = static_cast<std::size_t>(t); k < total; k += static_cast<std::size_t>(workers)) {
                    build_one(k);
                }
            } catch (...) {
                errors[static_cast<std::size_t>(t)] = std::current_exception();
            }
        });
    }
    for (auto& th : threads) th.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return dataset;
}

void substitute_ingested(Dataset& dataset, std::vector<GoldRecord> ingested) {
    std::size_t next = 0;
    for (auto& record : dataset.records) {
        if (record.form_id != kPaperSubmissionFormId || next >= ingested.size()) continue;
        const std::string id = record.sample_id;
        record = std::move(ingested[next++]);
        record.sample_id = id;
    }
}

std::string serialize_record(const GoldRecord& record) {
    nlohmann::ordered_json j;
    j["sample_id"] = record.sample_id;
    j["form_id"] = record.form_id;
    j["provenance"] = provenance_name(record.provenance);
    nlohmann::ordered_json gold = nlohmann::ordered_json::object();
    for (const auto& [k, v] : record.gold) gold[k] = v;
    j["gold"] = gold;
    j["context_document"] = record.context_document;
    return j.dump();
}

GoldRecord parse_record(std::string_view line) {
    try {
        const auto j = nlohmann::json::parse(line);
        GoldRecord r;
        r.sample_id = j.at("sample_id").get<std::string>();
        r.form_id = j.at("form_id").get<std::string>();
        const auto prov = parse_provenance(j.at("provenance").get<std::string>());
        if (!prov) throw Error(ErrorCode::MalformedDocument, "unknown provenance");
        r.provenance = *prov;
        for (auto& [k, v] : j.at("gold").items()) r.gold[k] = v.get<std::string>();
        r.context_document = j.at("context_document").get<std::string>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::MalformedDocument, std::string("bad dataset record: ") + e.what());
    }
}

std::string dataset_to_jsonl(const Dataset& dataset) {
    std::string out;
    for (const auto& r : dataset.records) {
        out += serialize_record(r);
        out += '\n';
    }
    return out;
}

void write_dataset(const Dataset& dataset, const std::string& path) {
    {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw Error(ErrorCode::Io, "cannot write " + path);
        out << dataset_to_jsonl(dataset);
    }
    nlohmann::ordered_json meta;
    meta["seed"] = dataset.seed;
    meta["catalog_hash"] = dataset.catalog_hash;
    meta["per_form_count"] = dataset.per_form_count;
    meta["record_count"] = dataset.records.size();
    std::ofstream out(path + ".meta.json", std::ios::binary);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + path + ".meta.json");
    out << meta.dump(2) << "\n";
}

Dataset read_dataset(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
    Dataset dataset;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty()) dataset.records.push_back(parse_record(line));
    }
    std::ifstream meta_in(path + ".meta.json");
    if (meta_in) {
        try {
            const auto meta = nlohmann::json::parse(meta_in);
            dataset.seed = meta.value("seed", std::uint64_t{0});
            dataset.catalog_hash = meta.value("catalog_hash", std::string());
            dataset.per_form_count = meta.value("per_form_count", 0);
        } catch (const nlohmann::json::exception& e) {
            throw Error(ErrorCode::MalformedDocument, path + ".meta.json: " + e.what());
        }
    }
    return dataset;
}

std::vector<std::string> check_record(const FormSchema& schema, const GoldRecord& record) {
    std::vector<std::string> problems;
    if (record.form_id != schema.form_id) problems.push_back("form_id mismatch");
    for (const FieldSpec* f : schema.scored_fields()) {
        auto it = record.gold.find(f->field_id);
        if (it == record.gold.end()) {
            problems.push_back("missing gold for " + f->field_id);
            continue;
        }
        if (!is_canonical(*f, it->second)) problems.push_back("non-canonical gold for " + f->field_id);
    }
    for (const auto& [k, v] : record.gold) {
        const FieldSpec* f = schema.find_field(k);
        if (!f || !f->scored) problems.push_back("gold key " + k + " is not a scored field");
    }
    for (const auto& id : missing_values(schema, record.gold, record.context_document)) {
        problems.push_back("context document lacks the value of " + id);
    }
    return problems;
}

}  // namespace formgym
