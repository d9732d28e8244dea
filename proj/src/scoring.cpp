#include "formgym/scoring.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

#include "formgym/error.hpp"

namespace formgym {

std::string_view protocol_name(Protocol protocol) {
    return protocol == Protocol::OutputScan ? "output_scan" : "state_strict";
}

double FieldVerdict::value_score() const {
    if (value_metric == ValueMetric::Bleu) return bleu_score.value_or(0.0);
    return value_correct ? 1.0 : 0.0;
}

std::vector<std::string> bleu_tokens(std::string_view text) {
    std::vector<std::string> tokens;
    std::string current;
    for (char c : text) {
        const auto u = static_cast<unsigned char>(c);
        if (std::isspace(u) || std::ispunct(u)) {
            if (!current.empty()) tokens.push_back(std::move(current));
            current.clear();
        } else {
            current += static_cast<char>(std::tolower(u));
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

double bleu(std::string_view candidate, std::string_view reference, int max_n) {
    if (max_n < 1) throw Error(ErrorCode::InvalidArgument, "max_n must be at least 1");
    const auto cand = bleu_tokens(candidate);
    const auto ref = bleu_tokens(reference);
    if (cand.empty()) return 0.0;
    const int orders = std::min<int>(max_n, static_cast<int>(cand.size()));
    double log_sum = 0.0;
    for (int n = 1; n <= orders; ++n) {
        std::map<std::vector<std::string>, int> ref_counts;
        for (std::size_t i = 0; i + static_cast<std::size_t>(n) <= ref.size(); ++i) {
            ++ref_counts[std::vector<std::string>(ref.begin() + static_cast<long>(i), ref.begin() + static_cast<long>(i) + n)];
        }
        std::map<std::vector<std::string>, int> cand_counts;
        const std::size_t total = cand.size() - static_cast<std::size_t>(n) + 1;
        for (std::size_t i = 0; i < total; ++i) {
            ++cand_counts[std::vector<std::string>(cand.begin() + static_cast<long>(i), cand.begin() + static_cast<long>(i) + n)];
        }
        long clipped = 0;
        for (const auto& [gram, count] : cand_counts) {
            auto it = ref_counts.find(gram);
            if (it != ref_counts.end()) clipped += std::min(count, it->second);
        }
        if (clipped == 0) return 0.0;
        log_sum += std::log(static_cast<double>(clipped) / static_cast<double>(total));
    }
    const double c = static_cast<double>(cand.size());
    const double r = static_cast<double>(ref.size());
    const double bp = c < r ? std::exp(1.0 - r / c) : 1.0;
    return bp * std::exp(log_sum / orders);
}

std::string canonical_match_form(std::string_view text) {
    std::string s = ascii_lower(normalize_space(text));
    if (s.size() >= 2 && ((s.front() == '"' && s.back() == '"') || (s.front() == '\'' && s.back() == '\''))) {
        s = normalize_space(std::string_view(s).substr(1, s.size() - 2));
    }
    return s;
}

bool output_contains(std::string_view haystack, std::string_view gold) {
    const std::string h = canonical_match_form(haystack);
    const std::string g = canonical_match_form(gold);
    if (g.empty()) return false;
    if (g.size() >= 3) return h.find(g) != std::string::npos;
    auto is_word = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; };
    for (std::size_t pos = h.find(g); pos != std::string::npos; pos = h.find(g, pos + 1)) {
        const bool left = pos == 0 || !is_word(h[pos - 1]);
        const bool right = pos + g.size() == h.size() || !is_word(h[pos + g.size()]);
        if (left && right) return true;
    }
    return false;
}

namespace {

FieldVerdict base_verdict(const FieldSpec& field, Protocol protocol) {
    FieldVerdict v;
    v.field_id = field.field_id;
    v.field_type = field.field_type;
    v.protocol = protocol;
    v.value_metric = field.field_type == FieldType::Description ? ValueMetric::Bleu : ValueMetric::Exact;
    if (v.value_metric == ValueMetric::Bleu) v.bleu_score = 0.0;
    return v;
}

}  // namespace

std::vector<FieldVerdict> score_value_outputscan(std::string_view raw_model_output, const ValueMap& gold,
                                                 const FormSchema& schema) {
    const ActionSequence parsed = parse_actions(raw_model_output);
    std::vector<std::string> typed;
    std::string scan(raw_model_output);
    for (const auto& a : parsed.actions) {
        if (const auto* t = std::get_if<Type>(&a)) {
            typed.push_back(t->text);
            scan += "\n" + t->text;
        }
    }
    std::vector<FieldVerdict> out;
    for (const FieldSpec* field : schema.scored_fields()) {
        auto it = gold.find(field->field_id);
        if (it == gold.end()) continue;
        FieldVerdict v = base_verdict(*field, Protocol::OutputScan);
        const std::string& g = it->second;
        switch (field->field_type) {
            case FieldType::Description: {
                double best = 0.0;
                for (const auto& t : typed) best = std::max(best, bleu(t, g));
                v.bleu_score = best;
                v.value_correct = best > 0.0;
                break;
            }
            case FieldType::MultipleChoice: {
                const auto parts = split_multi(g);
                v.value_correct = !parts.empty() && std::all_of(parts.begin(), parts.end(), [&](const std::string& p) {
                    return output_contains(scan, p);
                });
                break;
            }
            case FieldType::CheckboxInput:
                v.value_correct = output_contains(scan, g) || output_contains(scan, field->label);
                break;
            default:
                v.value_correct = output_contains(scan, g);
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<FieldVerdict> score_value_statestrict(const ValueMap& extracted, const ValueMap& gold,
                                                  const FormSchema& schema) {
    std::vector<FieldVerdict> out;
    for (const FieldSpec* field : schema.scored_fields()) {
        auto it = gold.find(field->field_id);
        if (it == gold.end()) continue;
        FieldVerdict v = base_verdict(*field, Protocol::StateStrict);
        auto got = extracted.find(field->field_id);
        if (got != extracted.end()) {
            if (field->field_type == FieldType::Description) {
                v.bleu_score = bleu(got->second, it->second);
                v.value_correct = *v.bleu_score > 0.0;
            } else {
                v.value_correct = canonicalize_string(*field, got->second) == canonicalize_string(*field, it->second);
            }
        }
        out.push_back(std::move(v));
    }
    return out;
}

double lcs_similarity(std::string_view a, std::string_view b) {
    const std::string x = ascii_lower(a);
    const std::string y = ascii_lower(b);
    const std::size_t longest = std::max(x.size(), y.size());
    if (longest == 0) return 0.0;
    std::vector<int> prev(y.size() + 1, 0);
    std::vector<int> cur(y.size() + 1, 0);
    for (std::size_t i = 1; i <= x.size(); ++i) {
        for (std::size_t j = 1; j <= y.size(); ++j) {
            cur[j] = x[i - 1] == y[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
        }
        std::swap(prev, cur);
    }
    return static_cast<double>(prev[y.size()]) / static_cast<double>(longest);
}

namespace {

bool is_click_like(const Action& a) {
    return std::holds_alternative<Click>(a) || std::holds_alternative<DoubleClick>(a) ||
           std::holds_alternative<RightClick>(a);
}

// Widgets whose owner is known from the widget itself.
bool self_attributing(WidgetKind kind) {
    switch (kind) {
        case WidgetKind::DropdownHead:
        case WidgetKind::DropdownOption:
        case WidgetKind::CheckboxSquare:
        case WidgetKind::RadioDot:
        case WidgetKind::DateBox:
        case WidgetKind::CalendarCell:
        case WidgetKind::CalendarNav:
        case WidgetKind::FileButton:
        case WidgetKind::FileDialogBox:
            return true;
        default:
            return false;
    }
}

bool click_hits_target(const Widget* w, const FieldSpec& field, const std::string& gold) {
    if (!w || !w->owner_field_id || *w->owner_field_id != field.field_id) return false;
    switch (field.field_type) {
        case FieldType::Dropdown:
        case FieldType::BinaryChoice:
        case FieldType::MultipleChoice: {
            if (!w->option_index) return false;
            if (w->kind != WidgetKind::DropdownOption && w->kind != WidgetKind::RadioDot &&
                w->kind != WidgetKind::CheckboxSquare) {
                return false;
            }
            const std::string& option = field.options[static_cast<std::size_t>(*w->option_index)];
            const auto parts = split_multi(gold);
            return std::find(parts.begin(), parts.end(), option) != parts.end();
        }
        case FieldType::Date:
            return w->kind == WidgetKind::DateBox ||
                   (w->kind == WidgetKind::CalendarCell && parse_date(gold) && parse_date(gold)->day == w->option_index);
        default:
            return true;
    }
}

}  // namespace

ClickVerdicts score_clicks(std::span<const ActionRecord> history, const ValueMap& gold, const FormSchema& schema) {
    ClickVerdicts out;
    for (std::size_t i = 0; i < history.size(); ++i) {
        const auto* click = std::get_if<Click>(&history[i].action);
        if (!click) continue;
        const Widget* w = hit_test(history[i].layout, click->x, click->y);
        std::optional<std::string> target;
        if (w && w->owner_field_id && self_attributing(w->kind)) {
            target = *w->owner_field_id;
        } else {
            for (std::size_t j = i + 1; j < history.size() && !is_click_like(history[j].action); ++j) {
                const auto* typed = std::get_if<Type>(&history[j].action);
                if (!typed) continue;
                double best = 0.0;
                for (const FieldSpec* field : schema.scored_fields()) {
                    auto g = gold.find(field->field_id);
                    if (g == gold.end()) continue;
                    const double sim = lcs_similarity(typed->text, g->second);
                    if (sim > best) {
                        best = sim;
                        target = field->field_id;
                    }
                }
                break;
            }
        }
        const FieldSpec* field = target ? schema.find_field(*target) : nullptr;
        auto g = target ? gold.find(*target) : gold.end();
        if (!field || !field->scored || g == gold.end()) {
            out.click_targets.push_back(std::nullopt);
            ++out.unattributed_clicks;
            continue;
        }
        out.click_targets.push_back(target);
        ++out.attributed_clicks;
        bool& verdict = out.per_field[*target];
        verdict = verdict || click_hits_target(w, *field, g->second);
    }
    return out;
}

ClickVerdicts score_clicks(std::span<const Action> actions, std::span<const LayoutTree> layouts, const ValueMap& gold,
                           const FormSchema& schema) {
    if (actions.size() != layouts.size()) {
        throw Error(ErrorCode::MisalignedHistory, std::to_string(actions.size()) + " actions but " +
                                                      std::to_string(layouts.size()) + " layouts");
    }
    std::vector<ActionRecord> history;
    history.reserve(actions.size());
    for (std::size_t i = 0; i < actions.size(); ++i) history.push_back({actions[i], layouts[i]});
    return score_clicks(history, gold, schema);
}

std::vector<FieldVerdict> attach_clicks(std::vector<FieldVerdict> verdicts, const ClickVerdicts& clicks) {
    for (auto& v : verdicts) {
        auto it = clicks.per_field.find(v.field_id);
        if (it != clicks.per_field.end()) v.click_correct = it->second;
    }
    return verdicts;
}

namespace {

ProtocolSummary summarize(const std::vector<const FieldVerdict*>& verdicts) {
    ProtocolSummary s;
    std::map<FieldType, std::pair<double, double>> sums;
    double click_sum = 0.0;
    double value_sum = 0.0;
    bool all_correct = !verdicts.empty();
    for (const FieldVerdict* v : verdicts) {
        const double click = v->click_correct.value_or(false) ? 1.0 : 0.0;
        const double value = v->value_score();
        sums[v->field_type].first += click;
        sums[v->field_type].second += value;
        ++s.atomic[v->field_type].field_count;
        click_sum += click;
        value_sum += value;
        all_correct = all_correct && v->value_correct;
    }
    for (auto& [type, score] : s.atomic) {
        score.click_acc = sums[type].first / score.field_count;
        score.value_acc = sums[type].second / score.field_count;
    }
    if (!verdicts.empty()) {
        s.episodic_click = click_sum / static_cast<double>(verdicts.size());
        s.episodic_value = value_sum / static_cast<double>(verdicts.size());
    }
    s.strict_completion = all_correct;
    return s;
}

}  // namespace

ScoreReport aggregate_report(const std::vector<FieldVerdict>& verdicts, const FormSchema& schema,
                             const EpisodeMeta& meta) {
    ScoreReport report;
    std::vector<const FieldVerdict*> scan;
    std::vector<const FieldVerdict*> strict;
    for (const auto& v : verdicts) {
        const FieldSpec* field = schema.find_field(v.field_id);
        if (!field) throw Error(ErrorCode::UnknownField, "verdict for unknown field '" + v.field_id + "'");
        (v.protocol == Protocol::OutputScan ? scan : strict).push_back(&v);
    }
    report.per_field = verdicts;
    report.output_scan = summarize(scan);
    report.state_strict = summarize(strict);
    report.action_match_rate =
        meta.action_count > 0 ? static_cast<double>(meta.effective_action_count) / meta.action_count : 0.0;
    report.overall = report.state_strict.episodic_value;
    report.unattributed_clicks = meta.unattributed_clicks;
    return report;
}

const std::vector<ReportBucket>& report_buckets() {
    static const std::vector<ReportBucket> buckets = {
        {"String", {FieldType::StringInput, FieldType::NumericInput, FieldType::FileUpload}},
        {"Drop-down List", {FieldType::Dropdown}},
        {"Radio Button", {FieldType::BinaryChoice}},
        {"Checkbox", {FieldType::MultipleChoice}},
        {"Check", {FieldType::CheckboxInput}},
        {"Description", {FieldType::Description}},
        {"Date", {FieldType::Date}},
        {"Numeric", {FieldType::NumericInput}},
        {"File Upload", {FieldType::FileUpload}},
    };
    return buckets;
}

std::map<std::string, AtomicScore> bucket_scores(const ScoreReport& report, Protocol protocol) {
    std::map<std::string, AtomicScore> out;
    const ProtocolSummary& summary = report.summary(protocol);
    for (const auto& bucket : report_buckets()) {
        AtomicScore acc;
        double click = 0.0;
        double value = 0.0;
        for (FieldType type : bucket.types) {
            auto it = summary.atomic.find(type);
            if (it == summary.atomic.end()) continue;
            click += it->second.click_acc * it->second.field_count;
            value += it->second.value_acc * it->second.field_count;
            acc.field_count += it->second.field_count;
        }
        if (acc.field_count == 0) continue;
        acc.click_acc = click / acc.field_count;
        acc.value_acc = value / acc.field_count;
        out[std::string(bucket.name)] = acc;
    }
    return out;
}

std::map<std::string, AtomicScore> pooled_bucket_scores(std::span<const ScoreReport> reports, Protocol protocol) {
    std::map<std::string, AtomicScore> sums;
    for (const auto& report : reports) {
        for (const auto& [name, score] : bucket_scores(report, protocol)) {
            AtomicScore& acc = sums[name];
            acc.click_acc += score.click_acc * score.field_count;
            acc.value_acc += score.value_acc * score.field_count;
            acc.field_count += score.field_count;
        }
    }
    for (auto& [name, acc] : sums) {
        acc.click_acc /= acc.field_count;
        acc.value_acc /= acc.field_count;
    }
    return sums;
}

namespace {

nlohmann::ordered_json summary_json(const ProtocolSummary& s) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json atomic = nlohmann::ordered_json::object();
    for (const auto& [type, score] : s.atomic) {
        atomic[std::string(field_type_name(type))] = {
            {"click_acc", score.click_acc}, {"value_acc", score.value_acc}, {"field_count", score.field_count}};
    }
    j["atomic"] = atomic;
    j["episodic_click"] = s.episodic_click;
    j["episodic_value"] = s.episodic_value;
    j["strict_completion"] = s.strict_completion;
    return j;
}

}  // namespace

std::string report_to_json(const ScoreReport& report, int indent) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& v : report.per_field) {
        nlohmann::ordered_json row;
        row["field_id"] = v.field_id;
        row["field_type"] = field_type_name(v.field_type);
        row["protocol"] = protocol_name(v.protocol);
        row["click_correct"] = v.click_correct ? nlohmann::ordered_json(*v.click_correct) : nlohmann::ordered_json();
        row["value_correct"] = v.value_correct;
        row["value_metric"] = v.value_metric == ValueMetric::Bleu ? "bleu" : "exact";
        if (v.bleu_score) row["bleu_score"] = *v.bleu_score;
        rows.push_back(row);
    }
    j["per_field"] = rows;
    j["output_scan"] = summary_json(report.output_scan);
    j["state_strict"] = summary_json(report.state_strict);
    j["action_match_rate"] = report.action_match_rate;
    j["overall"] = report.overall;
    j["unattributed_clicks"] = report.unattributed_clicks;
    return j.dump(indent);
}

std::string csv_header(std::string_view key_columns) {
    std::string out(key_columns);
    if (!out.empty()) out += ',';
    return out + "field_id,field_type,protocol,click_correct,value_correct,value_metric,bleu_score,value_score\n";
}

std::string report_csv_rows(const ScoreReport& report, std::string_view episode_key) {
    std::ostringstream out;
    out.precision(6);
    for (const auto& v : report.per_field) {
        if (!episode_key.empty()) out << episode_key << ',';
        out << v.field_id << ',' << field_type_name(v.field_type) << ',' << protocol_name(v.protocol) << ','
            << (v.click_correct ? (*v.click_correct ? "1" : "0") : "") << ',' << (v.value_correct ? 1 : 0) << ','
            << (v.value_metric == ValueMetric::Bleu ? "bleu" : "exact") << ',';
        if (v.bleu_score) out << *v.bleu_score;
        out << ',' << v.value_score() << '\n';
    }
    return out.str();
}

}  // namespace formgym
