#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "formgym/action.hpp"
#include "formgym/layout.hpp"
#include "formgym/record.hpp"
#include "formgym/schema.hpp"

namespace formgym {

enum class ValueMetric { Exact, Bleu };
enum class Protocol { OutputScan, StateStrict };

std::string_view protocol_name(Protocol protocol);

struct FieldVerdict {
    std::string field_id;
    FieldType field_type = FieldType::StringInput;
    std::optional<bool> click_correct;
    bool value_correct = false;
    ValueMetric value_metric = ValueMetric::Exact;
    std::optional<double> bleu_score;
    Protocol protocol = Protocol::OutputScan;

    /// BLEU for Description fields, otherwise 0/1.
    double value_score() const;
    bool operator==(const FieldVerdict&) const = default;
};

// --- BLEU -------------------------------------------------------------------

/// Lowercased tokens; whitespace and ASCII punctuation separate tokens and are dropped.
std::vector<std::string> bleu_tokens(std::string_view text);

/// Sentence BLEU against one reference, no smoothing. Orders above the
/// candidate length are skipped so that bleu(x, x) == 1 for short x.
double bleu(std::string_view candidate, std::string_view reference, int max_n = 4);

// --- value protocols --------------------------------------------------------

/// Trim, collapse whitespace, case-fold, strip one pair of surrounding quotes.
std::string canonical_match_form(std::string_view text);

/// Whether canonical `gold` occurs in canonical `haystack`; gold shorter than
/// three characters must sit on token boundaries.
bool output_contains(std::string_view haystack, std::string_view gold);

std::vector<FieldVerdict> score_value_outputscan(std::string_view raw_model_output,
                                                 const ValueMap& gold, const FormSchema& schema);

std::vector<FieldVerdict> score_value_statestrict(const ValueMap& extracted, const ValueMap& gold,
                                                  const FormSchema& schema);

// --- clicks -----------------------------------------------------------------

/// Longest-common-subsequence length over max(len) after case folding.
double lcs_similarity(std::string_view a, std::string_view b);

/// One executed action with the layout it was applied to.
struct ActionRecord {
    Action action;
    LayoutTree layout;
};

struct ClickVerdicts {
    std::map<std::string, bool> per_field;  // only fields with attributed clicks
    std::vector<std::optional<std::string>> click_targets;  // per Click, in order: attributed field
    int attributed_clicks = 0;
    int unattributed_clicks = 0;
};

ClickVerdicts score_clicks(std::span<const ActionRecord> history, const ValueMap& gold,
                           const FormSchema& schema);
/// Same, from parallel lists; throws MisalignedHistory when lengths differ.
ClickVerdicts score_clicks(std::span<const Action> actions, std::span<const LayoutTree> layouts,
                           const ValueMap& gold, const FormSchema& schema);

// --- aggregation ------------------------------------------------------------

struct AtomicScore {
    double click_acc = 0.0;
    double value_acc = 0.0;
    int field_count = 0;

    bool operator==(const AtomicScore&) const = default;
};

struct ProtocolSummary {
    std::map<FieldType, AtomicScore> atomic;
    double episodic_click = 0.0;
    double episodic_value = 0.0;
    bool strict_completion = false;

    bool operator==(const ProtocolSummary&) const = default;
};

struct EpisodeMeta {
    int action_count = 0;
    int effective_action_count = 0;  // actions whose event was not NoEffect
    int unattributed_clicks = 0;
};

struct ScoreReport {
    std::vector<FieldVerdict> per_field;  // both protocols, form order
    ProtocolSummary output_scan;
    ProtocolSummary state_strict;
    double action_match_rate = 0.0;
    double overall = 0.0;  // state-strict episodic value
    int unattributed_clicks = 0;

    const ProtocolSummary& summary(Protocol protocol) const {
        return protocol == Protocol::OutputScan ? output_scan : state_strict;
    }
};

/// Merges click verdicts into value verdicts (absent click => click_correct unset).
std::vector<FieldVerdict> attach_clicks(std::vector<FieldVerdict> verdicts, const ClickVerdicts& clicks);

/// Throws UnknownField when a verdict names a field absent from the schema.
ScoreReport aggregate_report(const std::vector<FieldVerdict>& verdicts, const FormSchema& schema,
                             const EpisodeMeta& meta);

/// Reporting buckets, in report column order.
struct ReportBucket {
    std::string_view name;
    std::vector<FieldType> types;
};
const std::vector<ReportBucket>& report_buckets();
/// Bucket averages per protocol: name -> (click, value).
std::map<std::string, AtomicScore> bucket_scores(const ScoreReport& report, Protocol protocol);
/// Field-weighted bucket accuracies over many episodes.
std::map<std::string, AtomicScore> pooled_bucket_scores(std::span<const ScoreReport> reports, Protocol protocol);

std::string report_to_json(const ScoreReport& report, int indent = 2);
/// `key_columns` / `episode_key` prefix every row, e.g. "form_id,sample_id".
std::string csv_header(std::string_view key_columns);
std::string report_csv_rows(const ScoreReport& report, std::string_view episode_key);

}  // namespace formgym
