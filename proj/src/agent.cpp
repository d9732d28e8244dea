#include "formgym/agent.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "formgym/digest.hpp"
#include "formgym/error.hpp"

namespace formgym {

// --- prompt -------------------------------------------------------------------

namespace {

const std::vector<Action>& few_shot_actions() {
    static const std::vector<Action> actions = {Click{300, 140}, Type{"Example Ltd"}, Click{310, 212},
                                                Click{100, 980}};
    return actions;
}

std::string few_shot_block() {
    const auto& a = few_shot_actions();
    std::string out = "# Company Name: Example Ltd\n";
    out += format_action(a[0]) + "\n" + format_action(a[1]) + "\n";
    out += "# Newsletter: Yes\n" + format_action(a[2]) + "\n";
    out += "# Page finished\n" + format_action(a[3]) + "\n";
    return out;
}

}  // namespace

std::string Prompt::digest() const {
    static const std::uint8_t kSeparator[1] = {0};
    return sha256_hex({std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()),
                       std::span<const std::uint8_t>(kSeparator), std::span<const std::uint8_t>(png)});
}

Prompt build_prompt(std::string_view context_document, const Observation& observation, bool ruler_hint) {
    std::ostringstream out;
    const int remaining = observation.page_count - observation.page_index - 1;
    out << "[prompt " << kPromptVersion << "]\n"
        << "You are filling in a web form shown in the attached screenshot (" << observation.viewport.width << "x"
        << observation.viewport.height << " pixels, origin at the top-left corner). This is page "
        << observation.page_index + 1 << " of " << observation.page_count << "; " << remaining
        << (remaining == 1 ? " page follows" : " pages follow") << " this one.\n\n"
        << "Use the document below to fill in every field visible on this page. Reply with actions only, one per "
           "line, in this grammar:\n"
        << "  CLICK(x, y)        left click at pixel (x, y)\n"
        << "  DOUBLECLICK(x, y)  double click; clears a text box\n"
        << "  RIGHTCLICK(x, y)   right click\n"
        << "  TYPE(\"text\")       type into the focused field; write \\\" for a quote and \\\\ for a backslash\n"
        << "Lines starting with # are comments.\n\n"
        << "Click a text box before typing into it. Click a drop-down to open it, then click an option. Click a "
           "date box to open the calendar, use < and > to change the month, then click the day; typing the date "
           "as YYYY-MM-DD also works. Click a file button, type the file path, then click the button again to "
           "confirm. When the page is done, click Next, or Submit on the last page.\n\n";
    if (ruler_hint) {
        out << "The screenshot has rulers along its top and left edges, with ticks every 50 pixels and labels "
               "every 100 pixels. Read click coordinates off these rulers.\n\n";
    }
    out << "Example for a different form:\n" << few_shot_block() << "\n"
        << "Document:\n<<<\n" << context_document << (context_document.ends_with('\n') ? "" : "\n") << ">>>\n";
    return {out.str(), encode_png(observation.screenshot)};
}

// --- log ----------------------------------------------------------------------

std::string_view episode_status_name(EpisodeStatus status) {
    switch (status) {
        case EpisodeStatus::Running: return "running";
        case EpisodeStatus::Submitted: return "submitted";
        case EpisodeStatus::StepCap: return "step_cap";
        case EpisodeStatus::Aborted: return "aborted";
    }
    return "?";
}

std::size_t EpisodeLog::step_count() const {
    std::size_t n = 0;
    for (const auto& t : turns) n += t.steps.size();
    return n;
}

std::string EpisodeLog::raw_output() const {
    std::string out;
    for (const auto& t : turns) {
        if (!out.empty()) out += '\n';
        out += t.raw_output;
    }
    return out;
}

namespace {

using ojson = nlohmann::ordered_json;

ojson event_json(const StepEvent& e) {
    ojson j;
    j["kind"] = step_event_kind_name(e.kind);
    j["field_id"] = e.field_id ? ojson(*e.field_id) : ojson();
    j["detail"] = e.detail;
    return j;
}

StepEvent event_from(const nlohmann::json& j) {
    StepEvent e;
    const auto kind = parse_step_event_kind(j.at("kind").get<std::string>());
    if (!kind) throw Error(ErrorCode::MalformedDocument, "unknown event kind");
    e.kind = *kind;
    if (!j.at("field_id").is_null()) e.field_id = j.at("field_id").get<std::string>();
    e.detail = j.at("detail").get<std::string>();
    return e;
}

Action single_action(const std::string& line) {
    ActionSequence seq = parse_actions(line);
    if (seq.actions.size() != 1 || !seq.diagnostics.empty()) {
        throw Error(ErrorCode::MalformedDocument, "bad logged action '" + line + "'");
    }
    return seq.actions.front();
}

}  // namespace

std::string serialize_log(const EpisodeLog& log) {
    std::string out;
    auto line = [&out](const ojson& j) {
        out += j.dump();
        out += '\n';
    };
    ojson h;
    h["record"] = "header";
    h["form_id"] = log.header.form_id;
    h["sample_id"] = log.header.sample_id;
    h["theme_id"] = log.header.theme_id;
    h["viewport"] = {log.header.viewport.width, log.header.viewport.height};
    h["ruler_on"] = log.header.ruler_on;
    h["seed"] = log.header.seed;
    h["model"] = log.header.model;
    h["prompt_version"] = log.header.prompt_version;
    h["initial_digest"] = log.initial_digest;
    line(h);
    for (const auto& t : log.turns) {
        ojson j;
        j["record"] = "turn";
        j["page_index"] = t.page_index;
        j["prompt_digest"] = t.prompt_digest;
        j["screenshot_digest"] = t.screenshot_digest;
        j["raw_output"] = t.raw_output;
        ojson parsed = ojson::array();
        for (const auto& a : t.parsed) parsed.push_back(format_action(a));
        j["parsed"] = parsed;
        ojson diags = ojson::array();
        for (const auto& d : t.diagnostics) diags.push_back({{"line", d.line_no}, {"message", d.message}});
        j["diagnostics"] = diags;
        j["model_turned_page"] = t.model_turned_page;
        j["model_seconds"] = t.model_seconds;
        line(j);
        for (const auto& s : t.steps) {
            ojson st;
            st["record"] = "step";
            st["action"] = format_action(s.action);
            st["event"] = event_json(s.event);
            st["screenshot_digest"] = s.screenshot_digest;
            st["driver_forced"] = s.driver_forced;
            line(st);
        }
    }
    ojson end;
    end["record"] = "end";
    end["status"] = episode_status_name(log.status);
    end["abort_reason"] = log.abort_reason;
    line(end);
    return out;
}

EpisodeLog parse_log(std::string_view text) {
    EpisodeLog log;
    bool have_header = false;
    std::size_t start = 0;
    int line_no = 0;
    try {
        while (start < text.size()) {
            std::size_t end = text.find('\n', start);
            if (end == std::string_view::npos) end = text.size();
            const std::string_view raw = text.substr(start, end - start);
            start = end + 1;
            ++line_no;
            if (raw.empty()) continue;
            const auto j = nlohmann::json::parse(raw);
            const std::string kind = j.at("record").get<std::string>();
            if (kind == "header") {
                log.header.form_id = j.at("form_id").get<std::string>();
                log.header.sample_id = j.at("sample_id").get<std::string>();
                log.header.theme_id = j.at("theme_id").get<std::string>();
                log.header.viewport = {j.at("viewport").at(0).get<int>(), j.at("viewport").at(1).get<int>()};
                log.header.ruler_on = j.at("ruler_on").get<bool>();
                log.header.seed = j.at("seed").get<std::uint64_t>();
                log.header.model = j.at("model").get<std::string>();
                log.header.prompt_version = j.at("prompt_version").get<std::string>();
                log.initial_digest = j.at("initial_digest").get<std::string>();
                have_header = true;
            } else if (kind == "turn") {
                TurnRecord t;
                t.page_index = j.at("page_index").get<int>();
                t.prompt_digest = j.at("prompt_digest").get<std::string>();
                t.screenshot_digest = j.at("screenshot_digest").get<std::string>();
                t.raw_output = j.at("raw_output").get<std::string>();
                for (const auto& a : j.at("parsed")) t.parsed.push_back(single_action(a.get<std::string>()));
                for (const auto& d : j.at("diagnostics")) {
                    t.diagnostics.push_back({d.at("line").get<int>(), d.at("message").get<std::string>()});
                }
                t.model_turned_page = j.at("model_turned_page").get<bool>();
                t.model_seconds = j.at("model_seconds").get<double>();
                log.turns.push_back(std::move(t));
            } else if (kind == "step") {
                if (log.turns.empty()) throw Error(ErrorCode::MalformedDocument, "step before any turn");
                LoggedStep s;
                s.action = single_action(j.at("action").get<std::string>());
                s.event = event_from(j.at("event"));
                s.screenshot_digest = j.at("screenshot_digest").get<std::string>();
                s.driver_forced = j.at("driver_forced").get<bool>();
                log.turns.back().steps.push_back(std::move(s));
            } else if (kind == "end") {
                const std::string status = j.at("status").get<std::string>();
                for (auto st : {EpisodeStatus::Running, EpisodeStatus::Submitted, EpisodeStatus::StepCap,
                                EpisodeStatus::Aborted}) {
                    if (episode_status_name(st) == status) log.status = st;
                }
                log.abort_reason = j.at("abort_reason").get<std::string>();
            } else {
                throw Error(ErrorCode::MalformedDocument, "unknown record '" + kind + "'");
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::MalformedDocument, "episode log line " + std::to_string(line_no) + ": " + e.what());
    }
    if (!have_header) throw Error(ErrorCode::MalformedDocument, "episode log has no header");
    return log;
}

void write_log(const EpisodeLog& log, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + path);
    out << serialize_log(log);
}

EpisodeLog read_log(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_log(buf.str());
}

// --- episodes -----------------------------------------------------------------

ScoreReport score_episode(const EnvState& final_state, std::span<const ActionRecord> history,
                          std::string_view raw_output, const std::vector<StepEvent>& events) {
    const FormSchema& schema = *final_state.schema;
    const ValueMap gold = final_state.sample ? final_state.sample->gold : ValueMap{};
    const ClickVerdicts clicks = score_clicks(history, gold, schema);
    std::vector<FieldVerdict> verdicts = attach_clicks(score_value_outputscan(raw_output, gold, schema), clicks);
    auto strict = attach_clicks(score_value_statestrict(extract_form_values(final_state), gold, schema), clicks);
    verdicts.insert(verdicts.end(), strict.begin(), strict.end());
    EpisodeMeta meta;
    meta.action_count = static_cast<int>(events.size());
    for (const auto& e : events) meta.effective_action_count += e.kind != StepEventKind::NoEffect ? 1 : 0;
    meta.unattributed_clicks = clicks.unattributed_clicks;
    return aggregate_report(verdicts, schema, meta);
}

namespace {

std::string call_with_retries(ModelClient& client, const Prompt& prompt, int max_retries) {
    for (int attempt = 0;; ++attempt) {
        try {
            return client.complete(prompt);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::ModelUnavailable || attempt >= max_retries) throw;
        }
    }
}

}  // namespace

EpisodeResult run_episode(ModelClient& client, const EnvState& session, const EpisodeOptions& options) {
    if (session.step_count != 0 || session.submitted) {
        throw Error(ErrorCode::InvalidArgument, "run_episode needs a fresh session");
    }
    EpisodeResult result;
    EnvState state = session;
    EpisodeLog& log = result.log;
    log.header.form_id = state.schema->form_id;
    log.header.sample_id = state.sample ? state.sample->sample_id : "";
    log.header.theme_id = state.config.theme.theme_id;
    log.header.viewport = state.config.viewport;
    log.header.ruler_on = state.config.ruler_on;
    log.header.seed = state.config.seed;
    log.header.model = client.name();

    std::vector<ActionRecord> model_history;
    std::vector<StepEvent> model_events;
    const std::string context = state.sample ? state.sample->context_document : "";

    auto apply = [&](TurnRecord& turn, const Action& action, bool forced) {
        LayoutTree layout = current_layout(state);
        StepOutcome outcome = step(state, action);
        state = std::move(outcome.state);
        LoggedStep logged{action, outcome.event, "", forced};
        if (options.digest_every_step) logged.screenshot_digest = bitmap_digest(observe(state).screenshot);
        if (!forced) {
            model_history.push_back({action, std::move(layout)});
            model_events.push_back(outcome.event);
        }
        turn.steps.push_back(std::move(logged));
    };

    Observation obs = observe(state);
    log.initial_digest = bitmap_digest(obs.screenshot);
    while (!state.submitted) {
        const int page = state.current_page;
        TurnRecord turn;
        turn.page_index = page;
        turn.screenshot_digest = bitmap_digest(obs.screenshot);
        const Prompt prompt = build_prompt(context, obs, state.config.ruler_on);
        turn.prompt_digest = prompt.digest();
        client.before_page(state);
        const auto t0 = std::chrono::steady_clock::now();
        try {
            turn.raw_output = call_with_retries(client, prompt, options.max_retries);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::ModelUnavailable) throw;
            log.status = EpisodeStatus::Aborted;
            log.abort_reason = e.what();
            log.turns.push_back(std::move(turn));
            break;
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        turn.model_seconds = std::round(secs * 1000.0) / 1000.0;
        ActionSequence parsed = parse_actions(turn.raw_output);
        turn.parsed = parsed.actions;
        turn.diagnostics = parsed.diagnostics;

        // Greedy: run everything the model emitted; anything after a page
        // turn was meant for a page the model never saw.
        for (const Action& action : parsed.actions) {
            if (state.submitted || state.current_page != page) break;
            apply(turn, action, false);
        }
        turn.model_turned_page = state.submitted || state.current_page != page;
        for (int attempt = 0; attempt < 3 && !state.submitted && state.current_page == page; ++attempt) {
            if (state.form.overlay) {
                // The right margin is always background.
                apply(turn, Click{state.config.viewport.width - 2, state.config.viewport.height - 2}, true);
                if (state.submitted) break;
            }
            const Widget* nav = current_layout(state).navigation();
            apply(turn, Click{nav->box.center_x(), nav->box.center_y()}, true);
        }
        log.turns.push_back(std::move(turn));
        if (!state.submitted && state.current_page == page) {
            log.status = EpisodeStatus::Aborted;
            log.abort_reason = "page did not advance";
            break;
        }
        if (!state.submitted) obs = observe(state);
    }
    if (log.status != EpisodeStatus::Aborted) {
        log.status = state.step_cap_reached ? EpisodeStatus::StepCap : EpisodeStatus::Submitted;
    }
    result.report = score_episode(state, model_history, log.raw_output(), model_events);
    result.final_state = std::move(state);
    return result;
}

ReplayResult replay_log(const EpisodeLog& log, std::shared_ptr<const FormSchema> schema,
                        std::shared_ptr<const GoldRecord> sample, const Theme& theme) {
    if (schema->form_id != log.header.form_id) {
        throw Error(ErrorCode::SchemaSampleMismatch, "log is for form '" + log.header.form_id + "'");
    }
    SessionConfig config;
    config.theme = theme;
    config.viewport = log.header.viewport;
    config.ruler_on = log.header.ruler_on;
    config.seed = log.header.seed;
    ReplayResult out;
    EnvState state = create_session(std::move(schema), std::move(sample), config);
    out.digests.push_back(bitmap_digest(observe(state).screenshot));
    if (!log.initial_digest.empty() && log.initial_digest != out.digests.back()) ++out.digest_mismatches;
    for (const auto& turn : log.turns) {
        for (const auto& s : turn.steps) {
            LayoutTree layout = current_layout(state);
            state = step(state, s.action).state;
            out.history.push_back({s.action, std::move(layout)});
            if (s.screenshot_digest.empty()) continue;
            out.digests.push_back(bitmap_digest(observe(state).screenshot));
            if (out.digests.back() != s.screenshot_digest) ++out.digest_mismatches;
        }
    }
    out.final_state = std::move(state);
    return out;
}

ScoreReport score_log(const EpisodeLog& log, std::shared_ptr<const FormSchema> schema,
                      std::shared_ptr<const GoldRecord> sample, const Theme& theme) {
    ReplayResult replay = replay_log(log, std::move(schema), std::move(sample), theme);
    std::vector<ActionRecord> history;
    std::vector<StepEvent> events;
    std::size_t k = 0;
    for (const auto& turn : log.turns) {
        for (const auto& s : turn.steps) {
            if (!s.driver_forced) {
                history.push_back(replay.history[k]);
                events.push_back(s.event);
            }
            ++k;
        }
    }
    return score_episode(replay.final_state, history, log.raw_output(), events);
}

// --- scripted agents -------------------------------------------------------------

namespace {

// Emits actions against a simulated copy of the session so later actions
// see the layout produced by earlier ones (open drop-downs, calendars).
class Planner {
public:
    explicit Planner(const EnvState& state) : sim_(state) {}

    const EnvState& sim() const { return sim_; }
    LayoutTree layout() const { return current_layout(sim_); }

    void comment(const std::string& text) {
        std::string line = text;
        for (char& c : line) {
            if (c == '\n') c = ' ';
        }
        text_ += "# " + line + "\n";
    }

    void emit(const Action& action) {
        out_.actions.push_back(action);
        text_ += format_action(action) + "\n";
        if (!sim_.submitted) sim_ = step(sim_, action).state;
    }

    // Click the centre of `widget_id`, or `dx` pixels left of its box.
    void click(const std::string& widget_id, int dx = 0) {
        const LayoutTree l = layout();
        const Widget* w = l.find(widget_id);
        if (!w) throw Error(ErrorCode::UnfillableField, "widget '" + widget_id + "' is not on screen");
        if (dx == 0) {
            const Widget* hit = hit_test(l, w->box.center_x(), w->box.center_y());
            if (!hit || hit->widget_id != widget_id) {
                throw Error(ErrorCode::UnfillableField, "widget '" + widget_id + "' is covered");
            }
            emit(Click{w->box.center_x(), w->box.center_y()});
        } else {
            emit(Click{w->box.left - dx, w->box.center_y()});
        }
    }

    ActionSequence take() { return std::move(out_); }
    std::string text() const { return text_; }

private:
    EnvState sim_;
    ActionSequence out_;
    std::string text_;
};

int option_index(const FieldSpec& field, const std::string& option) {
    for (std::size_t i = 0; i < field.options.size(); ++i) {
        if (field.options[i] == option) return static_cast<int>(i);
    }
    throw Error(ErrorCode::UnfillableField, "'" + option + "' is not an option of " + field.field_id);
}

// Enters `value` (canonical form) into `field`. `miss` shifts the first
// click off its target.
void fill_field(Planner& p, const FieldSpec& field, const std::string& value, bool miss = false) {
    const std::string& id = field.field_id;
    const int dx = miss ? 5 : 0;
    switch (field.field_type) {
        case FieldType::StringInput:
        case FieldType::Description:
        case FieldType::NumericInput: {
            const auto& values = p.sim().form.values;
            if (values.contains(id) && !miss) {
                const LayoutTree l = p.layout();
                const Widget* w = l.find(id + "/box");
                if (!w) throw Error(ErrorCode::UnfillableField, "no box for " + id);
                p.emit(DoubleClick{w->box.center_x(), w->box.center_y()});
            } else {
                p.click(id + "/box", dx);
            }
            p.emit(Type{value});
            return;
        }
        case FieldType::Date: {
            const auto date = parse_date(value);
            if (!date) throw Error(ErrorCode::UnfillableField, "gold date '" + value + "' is not a date");
            p.click(id + "/box", dx);
            const auto& overlay = p.sim().form.overlay;
            if (!overlay || overlay->kind != Overlay::Kind::Calendar) return;
            const int delta = months_between(overlay->visible_month, CivilDate{date->year, date->month, 1});
            for (int i = 0; i < std::abs(delta); ++i) p.click(id + (delta > 0 ? "/cal/next" : "/cal/prev"));
            p.click(id + "/cal/day/" + std::to_string(date->day));
            return;
        }
        case FieldType::Dropdown: {
            const int k = option_index(field, value);
            p.click(id + "/head", dx);
            if (!p.sim().form.overlay) return;
            p.click(id + "/option/" + std::to_string(k));
            return;
        }
        case FieldType::BinaryChoice:
            p.click(id + "/opt/" + std::to_string(option_index(field, value)), dx);
            return;
        case FieldType::MultipleChoice: {
            std::set<int> want;
            for (const auto& part : split_multi(value)) want.insert(option_index(field, part));
            std::set<int> have;
            if (auto it = p.sim().form.values.find(id); it != p.sim().form.values.end()) {
                if (const auto* s = std::get_if<OptionSet>(&it->second)) have = s->indices;
            }
            bool first = true;
            for (int i = 0; i < static_cast<int>(field.options.size()); ++i) {
                if (want.contains(i) == have.contains(i)) continue;
                p.click(id + "/opt/" + std::to_string(i), first ? dx : 0);
                first = false;
            }
            return;
        }
        case FieldType::CheckboxInput: {
            bool checked = false;
            if (auto it = p.sim().form.values.find(id); it != p.sim().form.values.end()) {
                if (const auto* s = std::get_if<OptionSet>(&it->second)) checked = s->indices.contains(0);
            }
            if (checked != (value == kCheckedValue)) p.click(id + "/opt/0", dx);
            return;
        }
        case FieldType::FileUpload:
            p.click(id + "/button", dx);
            if (!p.sim().form.overlay) return;
            p.emit(Type{value});
            p.click(id + "/button");
            return;
    }
}

std::string value_comment(const FieldSpec& field, const std::string& value) { return field.label + ": " + value; }

void press_navigation(Planner& p) {
    const LayoutTree l = p.layout();
    const Widget* nav = l.navigation();
    p.comment(nav->kind == WidgetKind::SubmitButton ? "Submit the form" : "Next page");
    p.click(nav->widget_id);
}

const std::string* gold_for(const EnvState& state, const FieldSpec& field) {
    if (!state.sample) return nullptr;
    auto it = state.sample->gold.find(field.field_id);
    return it == state.sample->gold.end() ? nullptr : &it->second;
}

Planner oracle_plan(const EnvState& state) {
    Planner p(state);
    for (const FieldSpec* field : state.schema->fields_on_page(state.current_page)) {
        if (!field->scored) continue;
        const std::string* gold = gold_for(state, *field);
        if (!gold) continue;
        p.comment(value_comment(*field, *gold));
        fill_field(p, *field, *gold);
    }
    press_navigation(p);
    return p;
}

std::string with_typo(const std::string& value, RandomStream& s) {
    if (value.size() < 2) return value + "x";
    std::string out = value;
    const std::size_t i = static_cast<std::size_t>(s.below(out.size() - 1));
    if (s.chance(0.5)) {
        std::swap(out[i], out[i + 1]);
        if (out == value) out.erase(i, 1);
    } else {
        out.erase(i, 1);
    }
    return out;
}

}  // namespace

ActionSequence oracle_agent(const EnvState& state) { return oracle_plan(state).take(); }

std::string OracleClient::complete(const Prompt& /*prompt*/) {
    if (!state_) throw Error(ErrorCode::ModelUnavailable, "oracle has no session");
    return oracle_plan(*state_).text();
}

void OracleClient::before_page(const EnvState& state) { state_ = state; }

void NoisyClient::before_page(const EnvState& state) { state_ = state; }

std::string NoisyClient::complete(const Prompt& /*prompt*/) {
    if (!state_) throw Error(ErrorCode::ModelUnavailable, "noisy agent has no session");
    const EnvState& state = *state_;
    Planner p(state);
    const auto page_fields = state.schema->fields_on_page(state.current_page);
    for (const FieldSpec* field : page_fields) {
        if (!field->scored) continue;
        const std::string* gold = gold_for(state, *field);
        if (!gold) continue;
        if (stream_.chance(noise_.chatter)) p.comment("The document mentions " + *gold + ".");
        if (stream_.chance(noise_.skip_field)) continue;
        std::string value = *gold;
        switch (field->field_type) {
            case FieldType::Dropdown:
            case FieldType::BinaryChoice:
                if (stream_.chance(noise_.wrong_option)) {
                    const int k = (option_index(*field, value) + 1 +
                                   static_cast<int>(stream_.below(field->options.size() - 1))) %
                                  static_cast<int>(field->options.size());
                    value = field->options[static_cast<std::size_t>(k)];
                }
                break;
            case FieldType::MultipleChoice:
                if (stream_.chance(noise_.wrong_option)) {
                    value = field->options[stream_.below(field->options.size())];
                }
                break;
            case FieldType::CheckboxInput:
                break;
            case FieldType::Date:
                if (stream_.chance(noise_.typo)) {
                    const auto d = parse_date(value);
                    value = format_date(CivilDate{d->year, d->month, d->day == 1 ? 2 : d->day - 1});
                }
                break;
            default:
                if (stream_.chance(noise_.typo)) value = with_typo(value, stream_);
        }
        const bool miss = stream_.chance(noise_.miss_click);
        p.comment(value_comment(*field, value));
        fill_field(p, *field, value, miss);
    }
    if (!p.sim().submitted && stream_.chance(0.9)) press_navigation(p);
    return p.text();
}

std::string RandomClickClient::complete(const Prompt& /*prompt*/) {
    std::string out;
    for (int i = 0; i < clicks_per_page_; ++i) {
        const int x = static_cast<int>(stream_.below(static_cast<std::uint64_t>(viewport_.width)));
        const int y = static_cast<int>(stream_.below(static_cast<std::uint64_t>(viewport_.height)));
        out += format_action(Click{x, y}) + "\n";
    }
    return out;
}

FixtureClient FixtureClient::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
    std::map<std::string, std::string> responses;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            const auto j = nlohmann::json::parse(line);
            responses[j.at("prompt_digest").get<std::string>()] = j.at("response").get<std::string>();
        } catch (const nlohmann::json::exception& e) {
            throw Error(ErrorCode::MalformedDocument, path + ": " + e.what());
        }
    }
    return FixtureClient(std::move(responses));
}

void FixtureClient::append_to_file(const std::string& path, const std::string& prompt_digest,
                                   const std::string& response) {
    std::ofstream out(path, std::ios::app | std::ios::binary);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + path);
    ojson j;
    j["prompt_digest"] = prompt_digest;
    j["response"] = response;
    out << j.dump() << "\n";
}

std::string FixtureClient::complete(const Prompt& prompt) {
    auto it = responses_.find(prompt.digest());
    if (it == responses_.end()) throw Error(ErrorCode::ModelUnavailable, "no fixture for prompt " + prompt.digest());
    return it->second;
}

std::map<std::string, double> random_click_rates(const LayoutTree& layout, int clicks, RandomStream& stream) {
    std::map<std::string, double> rates;
    for (const auto& f : layout.fields) rates[f.field_id] = 0.0;
    if (clicks <= 0) return rates;
    for (int i = 0; i < clicks; ++i) {
        const int x = static_cast<int>(stream.below(static_cast<std::uint64_t>(layout.viewport.width)));
        const int y = static_cast<int>(stream.below(static_cast<std::uint64_t>(layout.viewport.height)));
        const Widget* w = hit_test(layout, x, y);
        if (w && w->owner_field_id) rates[*w->owner_field_id] += 1.0;
    }
    for (auto& [id, r] : rates) r /= clicks;
    return rates;
}

std::map<std::string, double> hit_area_ratios(const LayoutTree& layout) {
    std::map<std::string, double> ratios;
    for (const auto& f : layout.fields) ratios[f.field_id] = 0.0;
    const double total = static_cast<double>(layout.viewport.width) * layout.viewport.height;
    bool overlays = false;
    for (const auto& w : layout.widgets) overlays = overlays || w.layer > 0;
    if (!overlays) {
        for (const auto& w : layout.widgets) {
            if (is_interactive(w.kind) && w.owner_field_id) ratios[*w.owner_field_id] += static_cast<double>(w.box.area());
        }
    } else {
        for (int y = 0; y < layout.viewport.height; ++y) {
            for (int x = 0; x < layout.viewport.width; ++x) {
                const Widget* w = hit_test(layout, x, y);
                if (w && w->owner_field_id) ratios[*w->owner_field_id] += 1.0;
            }
        }
    }
    for (auto& [id, r] : ratios) r /= total;
    return ratios;
}

}  // namespace formgym
