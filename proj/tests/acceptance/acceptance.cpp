// Acceptance suite: one PASS/FAIL line per headline criterion. Exit status is
// nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "formgym/agent.hpp"
#include "formgym/datagen.hpp"
#include "formgym/env.hpp"
#include "formgym/layout.hpp"
#include "formgym/scoring.hpp"
#include "reference_bleu.hpp"

#include <nlohmann/json.hpp>

using namespace formgym;
using formgym::testing::reference_bleu;

namespace {

using Seconds = std::chrono::duration<double>;

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void run(const char* name, const std::function<Outcome()>& check) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = check();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = Seconds(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %s (%s; %.1fs)\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++failures;
}

double elapsed(std::chrono::steady_clock::time_point t0) {
    return Seconds(std::chrono::steady_clock::now() - t0).count();
}

EnvState session(const FormSchema& form, const GoldRecord& sample, const Theme& theme, std::uint64_t seed = 0) {
    SessionConfig config;
    config.theme = theme;
    config.seed = seed;
    return create_session(std::make_shared<const FormSchema>(form), std::make_shared<const GoldRecord>(sample),
                          config);
}

Outcome dataset_accounting() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto& catalog = builtin_catalog();
    const Dataset d = build_dataset(catalog, 50, 42);
    const double secs = elapsed(t0);
    std::size_t fields = 0;
    for (const auto& f : catalog) fields += f.fields.size();
    std::size_t pairs = 0;
    for (const auto& r : d.records) pairs += r.gold.size();
    std::set<std::string> forms;
    for (const auto& r : d.records) forms.insert(r.form_id);
    const bool ok = catalog.size() == 25 && forms.size() == 25 && fields == 279 && d.records.size() == 1250 &&
                    pairs == 13800 && d.pair_count() == 13800 && secs < 60.0;
    char buf[160];
    std::snprintf(buf, sizeof buf, "forms=%zu fields=%zu records=%zu pairs=%zu in %.2fs", forms.size(), fields,
                  d.records.size(), pairs, secs);
    return {ok, buf};
}

Outcome oracle_ceiling() {
    const auto t0 = std::chrono::steady_clock::now();
    const Dataset d = build_dataset(builtin_catalog(), 3, 42);
    int episodes = 0;
    int perfect = 0;
    std::string first_miss;
    for (const auto& form : builtin_catalog()) {
        const auto samples = d.for_form(form.form_id);
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
            for (const char* theme_id : {"plain", "compact", "dark"}) {
                OracleClient oracle;
                const EpisodeResult r =
                    run_episode(oracle, session(form, *samples[seed], *find_theme(builtin_themes(), theme_id), seed));
                ++episodes;
                const auto& s = r.report.state_strict;
                if (s.episodic_click == 1.0 && s.episodic_value == 1.0 && s.strict_completion) {
                    ++perfect;
                } else if (first_miss.empty()) {
                    first_miss = " first miss " + form.form_id + "/" + theme_id;
                }
            }
        }
    }
    const double secs = elapsed(t0);
    char buf[160];
    std::snprintf(buf, sizeof buf, "%d/%d episodes at click=value=1.0 in %.1fs", perfect, episodes, secs);
    return {episodes == 225 && perfect == 225 && secs < 300.0, buf + first_miss};
}

// Exhaustive per-pixel reference: highest layer, then last painted; a label
// on top shadows whatever it covers.
const Widget* reference_hit(const LayoutTree& layout, int x, int y) {
    const Widget* best = nullptr;
    for (const Widget& w : layout.widgets) {
        const bool inside = x >= w.box.left && x < w.box.left + w.box.width && y >= w.box.top &&
                            y < w.box.top + w.box.height;
        if (inside && (!best || w.layer >= best->layer)) best = &w;
    }
    if (best && !is_interactive(best->kind)) return nullptr;
    return best;
}

Outcome hit_test_equivalence() {
    static constexpr WidgetKind kKinds[] = {WidgetKind::TextBox,     WidgetKind::TextArea,       WidgetKind::DropdownHead,
                                            WidgetKind::DropdownOption, WidgetKind::CheckboxSquare, WidgetKind::RadioDot,
                                            WidgetKind::DateBox,     WidgetKind::CalendarCell,   WidgetKind::CalendarNav,
                                            WidgetKind::NumericBox,  WidgetKind::FileButton,     WidgetKind::Label,
                                            WidgetKind::SubmitButton};
    RandomStream rng(2024);
    long long mismatches = 0;
    long long pixels = 0;
    for (int t = 0; t < 20; ++t) {
        LayoutTree layout;
        layout.viewport = {200, 200};
        const int n = static_cast<int>(rng.between(5, 40));
        for (int i = 0; i < n; ++i) {
            Widget w;
            w.widget_id = "w" + std::to_string(i);
            w.kind = kKinds[rng.below(std::size(kKinds))];
            w.owner_field_id = "f" + std::to_string(i % 6);
            w.box = {static_cast<int>(rng.between(-10, 195)), static_cast<int>(rng.between(-10, 195)),
                     static_cast<int>(rng.between(1, 90)), static_cast<int>(rng.between(1, 90))};
            w.layer = rng.chance(0.25) ? 1 : 0;
            layout.widgets.push_back(std::move(w));
        }
        for (int y = 0; y < 200; ++y) {
            for (int x = 0; x < 200; ++x) {
                ++pixels;
                mismatches += hit_test(layout, x, y) != reference_hit(layout, x, y);
            }
        }
    }
    return {mismatches == 0 && pixels == 800000,
            std::to_string(mismatches) + " mismatches over " + std::to_string(pixels) + " pixels in 20 layouts"};
}

Outcome determinism() {
    const Dataset d = build_dataset(builtin_catalog(), 2, 42);
    int replayed = 0;
    int mismatches = 0;
    std::size_t steps = 0;
    const auto& catalog = builtin_catalog();
    for (int i = 0; i < 10; ++i) {
        const FormSchema& form = catalog[static_cast<std::size_t>(i * 2)];
        const GoldRecord& sample = *d.for_form(form.form_id)[static_cast<std::size_t>(i % 2)];
        const Theme& theme = builtin_themes()[static_cast<std::size_t>(i) % builtin_themes().size()];
        NoisyClient noisy(static_cast<std::uint64_t>(100 + i));
        const EpisodeResult r = run_episode(noisy, session(form, sample, theme, static_cast<std::uint64_t>(i)));
        const EpisodeLog log = parse_log(serialize_log(r.log));
        const ReplayResult rep = replay_log(log, std::make_shared<const FormSchema>(form),
                                            std::make_shared<const GoldRecord>(sample), theme);
        mismatches += rep.digest_mismatches;
        if (rep.digests.front() != log.initial_digest) ++mismatches;
        std::size_t k = 1;
        for (const auto& turn : log.turns) {
            for (const auto& s : turn.steps) {
                if (s.screenshot_digest.empty() || rep.digests.at(k) != s.screenshot_digest) ++mismatches;
                ++k;
            }
        }
        steps += k - 1;
        ++replayed;
    }
    const std::string a = dataset_to_jsonl(build_dataset(builtin_catalog(), 50, 7));
    const std::string b = dataset_to_jsonl(build_dataset(builtin_catalog(), 50, 7));
    return {replayed == 10 && mismatches == 0 && steps > 0 && a == b,
            std::to_string(replayed) + " episodes, " + std::to_string(steps) + " steps, " +
                std::to_string(mismatches) + " digest mismatches; dataset regeneration " +
                (a == b ? "byte-identical" : "differs")};
}

Outcome bleu_correctness() {
    static const std::vector<std::string> words = {"a",    "form", "field", "value", "the",  "date", "of", "name",
                                                   "city", "page", "next",  "agent", "type", "and",  "box"};
    RandomStream rng(99);
    double worst = 0.0;
    int nonzero = 0;
    for (int i = 0; i < 20; ++i) {
        std::string ref;
        std::string cand;
        const auto n = rng.between(4, 20);
        for (std::int64_t k = 0; k < n; ++k) {
            const std::string& w = rng.pick(words);
            ref += (k ? " " : "") + w;
            if (!rng.chance(0.2)) cand += (cand.empty() ? "" : " ") + (rng.chance(0.15) ? rng.pick(words) : w);
        }
        const double got = bleu(cand, ref);
        worst = std::max(worst, std::abs(got - reference_bleu(cand, ref)));
        nonzero += got > 0.0;
    }
    const bool identity = bleu("the applicant moved to berlin in may", "the applicant moved to berlin in may") == 1.0;
    const bool disjoint = bleu("alpha beta gamma delta", "one two three four five") == 0.0;
    char buf[160];
    std::snprintf(buf, sizeof buf, "max |diff|=%.3g over 20 pairs (%d nonzero), identity=%d disjoint=%d", worst,
                  nonzero, identity, disjoint);
    return {worst <= 1e-9 && identity && disjoint, buf};
}

Outcome random_floor() {
    const Dataset d = build_dataset(builtin_catalog(), 1, 42);
    double worst = 0.0;
    std::string worst_field;
    int fields = 0;
    double desc_ratio = 0.0;
    double other_ratio = 0.0;
    int desc_n = 0;
    int other_n = 0;
    for (const auto& form : builtin_catalog()) {
        EnvState state = session(form, *d.for_form(form.form_id).front(), builtin_theme("plain"));
        RandomStream stream = derive_stream(42, "random-floor:" + form.form_id, 0);
        for (int page = 0; page < form.page_count; ++page) {
            state.current_page = page;
            const LayoutTree layout = current_layout(state);
            const auto rates = random_click_rates(layout, 10000, stream);
            const auto areas = hit_area_ratios(layout);
            for (const auto& f : layout.fields) {
                const double diff = std::abs(rates.at(f.field_id) - areas.at(f.field_id));
                ++fields;
                if (diff > worst) {
                    worst = diff;
                    worst_field = form.form_id + "." + f.field_id;
                }
                if (f.type == FieldType::Description) {
                    desc_ratio += areas.at(f.field_id);
                    ++desc_n;
                } else {
                    other_ratio += areas.at(f.field_id);
                    ++other_n;
                }
            }
        }
    }
    char buf[240];
    std::snprintf(buf, sizeof buf,
                  "%d fields, max |rate-area|=%.4f at %s; mean hit area Description=%.4f other=%.4f", fields, worst,
                  worst_field.c_str(), desc_ratio / std::max(desc_n, 1), other_ratio / std::max(other_n, 1));
    return {worst <= 0.02 && fields > 0, buf};
}

Outcome protocol_dominance() {
    const Dataset d = build_dataset(builtin_catalog(), 4, 42);
    const auto& catalog = builtin_catalog();
    int violations = 0;
    int strictly_lower = 0;
    for (int i = 0; i < 100; ++i) {
        const FormSchema& form = catalog[static_cast<std::size_t>(i) % catalog.size()];
        const GoldRecord& sample = *d.for_form(form.form_id)[static_cast<std::size_t>(i / 25)];
        NoisyClient noisy(static_cast<std::uint64_t>(5000 + i));
        const EpisodeResult r = run_episode(noisy, session(form, sample, builtin_theme("plain")));
        const double strict = r.report.state_strict.episodic_value;
        const double scan = r.report.output_scan.episodic_value;
        if (strict > scan + 1e-12) ++violations;
        if (strict < scan - 1e-12) ++strictly_lower;
    }
    return {violations == 0, std::to_string(violations) + " violations in 100 episodes, state-strict lower in " +
                                 std::to_string(strictly_lower)};
}

Outcome field_type_composition() {
    nlohmann::json doc;
    doc["form_id"] = "nine_types";
    doc["name"] = "Nine Types";
    doc["domain_category"] = "Technology & Software";
    doc["page_count"] = 1;
    doc["theme_id"] = "plain";
    doc["fields"] = nlohmann::json::array();
    for (FieldType type : kAllFieldTypes) {
        nlohmann::json f;
        const std::string name(field_type_name(type));
        f["field_id"] = "f_" + name;
        f["label"] = name;
        f["type"] = name;
        f["required"] = true;
        f["scored"] = true;
        f["page"] = 0;
        if (type == FieldType::Dropdown) f["options"] = {"North", "South", "East", "West"};
        if (type == FieldType::BinaryChoice) f["options"] = {"Yes", "No"};
        if (type == FieldType::MultipleChoice) f["options"] = {"Email", "Phone", "Post", "Fax"};
        if (type == FieldType::NumericInput) f["numeric_range"] = {{"min", 0}, {"max", 5000}};
        doc["fields"].push_back(f);
    }
    const FormSchema form = load_form_schema(doc.dump());
    int filled = 0;
    int samples = 0;
    std::string miss;
    for (int k = 0; k < 20; ++k) {
        const GoldRecord sample = build_sample(form, k, 42);
        EnvState state = session(form, sample, builtin_theme("plain"));
        const ActionSequence plan = oracle_agent(state);
        for (const Action& a : plan.actions) {
            if (state.submitted) break;
            if (!std::holds_alternative<Click>(a) && !std::holds_alternative<Type>(a)) return {false, "non-basic action"};
            state = step(state, a).state;
        }
        const ValueMap values = extract_form_values(state);
        ++samples;
        bool all = true;
        for (const auto& [field, gold] : sample.gold) {
            const auto it = values.find(field);
            if (it == values.end() || it->second != gold) {
                all = false;
                if (miss.empty()) miss = "; first miss " + field + " in sample " + std::to_string(k);
            }
        }
        filled += all && state.submitted;
    }
    return {filled == samples && form.fields.size() == 9,
            std::to_string(filled) + "/" + std::to_string(samples) + " nine-type forms filled by Click/Type" + miss};
}

}  // namespace

int main() {
    run("dataset-accounting", dataset_accounting);
    run("oracle-ceiling", oracle_ceiling);
    run("hit-test-equivalence", hit_test_equivalence);
    run("determinism-replay", determinism);
    run("bleu-correctness", bleu_correctness);
    run("random-agent-floor", random_floor);
    run("protocol-dominance", protocol_dominance);
    run("field-type-composition", field_type_composition);
    return failures == 0 ? 0 : 1;
}
