#include "formgym/server.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include <httplib.h>

#include "formgym/digest.hpp"
#include "formgym/error.hpp"
#include "formgym/render.hpp"

namespace formgym {

namespace fs = std::filesystem;
using nlohmann::json;

// --- configuration ---------------------------------------------------------------

namespace {

void read_endpoint(const json& j, ModelEndpoint& model) {
    for (const auto& [key, value] : j.items()) {
        if (key == "base_url") model.base_url = value.get<std::string>();
        else if (key == "model") model.model = value.get<std::string>();
        else if (key == "api_key_env") model.api_key_env = value.get<std::string>();
        else if (key == "timeout_seconds") model.timeout_seconds = value.get<int>();
        else if (key == "max_retries") model.max_retries = value.get<int>();
        else if (key == "temperature") model.temperature = value.get<double>();
        else if (key == "max_tokens") model.max_tokens = value.get<int>();
        else throw Error(ErrorCode::InvalidArgument, "unknown model config key '" + key + "'");
    }
}

int parse_int(const std::string& text, const char* what) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(text, &used);
        if (used == text.size()) return v;
    } catch (const std::exception&) {
    }
    throw Error(ErrorCode::InvalidArgument, std::string(what) + " is not an integer: '" + text + "'");
}

void check_config(const ServiceConfig& c) {
    if (c.port < 0 || c.port > 65535) throw Error(ErrorCode::InvalidArgument, "port out of range");
    if (c.step_cap <= 0) throw Error(ErrorCode::InvalidArgument, "step_cap must be positive");
    if (c.idle_timeout_seconds <= 0) throw Error(ErrorCode::InvalidArgument, "idle_timeout_seconds must be positive");
    if (c.per_form_count <= 0) throw Error(ErrorCode::InvalidArgument, "per_form_count must be positive");
}

}  // namespace

ServiceConfig load_service_config(const std::string& path) {
    ServiceConfig c;
    if (path.empty()) return c;
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Io, "cannot open config " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::MalformedDocument, path + ": " + e.what());
    }
    if (!j.is_object()) throw Error(ErrorCode::MalformedDocument, path + ": config must be an object");
    try {
        for (const auto& [key, value] : j.items()) {
            if (key == "host") c.host = value.get<std::string>();
            else if (key == "port") c.port = value.get<int>();
            else if (key == "dataset_path") c.dataset_path = value.get<std::string>();
            else if (key == "dataset_seed") c.dataset_seed = value.get<std::uint64_t>();
            else if (key == "per_form_count") c.per_form_count = value.get<int>();
            else if (key == "catalog_dir") c.catalog_dir = value.get<std::string>();
            else if (key == "themes_dir") c.themes_dir = value.get<std::string>();
            else if (key == "step_cap") c.step_cap = value.get<int>();
            else if (key == "idle_timeout_seconds") c.idle_timeout_seconds = value.get<int>();
            else if (key == "log_dir") c.log_dir = value.get<std::string>();
            else if (key == "model") read_endpoint(value, c.model);
            else throw Error(ErrorCode::InvalidArgument, "unknown config key '" + key + "'");
        }
    } catch (const json::exception& e) {
        throw Error(ErrorCode::MalformedDocument, path + ": " + e.what());
    }
    check_config(c);
    return c;
}

void apply_env_overrides(ServiceConfig& c, const std::function<const char*(const char*)>& getenv_fn) {
    auto get = [&](const char* name) -> std::optional<std::string> {
        const char* v = getenv_fn(name);
        if (!v || !*v) return std::nullopt;
        return std::string(v);
    };
    if (auto v = get("FORMGYM_HOST")) c.host = *v;
    if (auto v = get("FORMGYM_PORT")) c.port = parse_int(*v, "FORMGYM_PORT");
    if (auto v = get("FORMGYM_DATASET")) c.dataset_path = *v;
    if (auto v = get("FORMGYM_SEED")) {
        try {
            c.dataset_seed = std::stoull(*v);
        } catch (const std::exception&) {
            throw Error(ErrorCode::InvalidArgument, "FORMGYM_SEED is not an integer");
        }
    }
    if (auto v = get("FORMGYM_CATALOG_DIR")) c.catalog_dir = *v;
    if (auto v = get("FORMGYM_THEMES_DIR")) c.themes_dir = *v;
    if (auto v = get("FORMGYM_STEP_CAP")) c.step_cap = parse_int(*v, "FORMGYM_STEP_CAP");
    if (auto v = get("FORMGYM_IDLE_TIMEOUT")) c.idle_timeout_seconds = parse_int(*v, "FORMGYM_IDLE_TIMEOUT");
    if (auto v = get("FORMGYM_LOG_DIR")) c.log_dir = *v;
    if (auto v = get("FORMGYM_MODEL_URL")) c.model.base_url = *v;
    if (auto v = get("FORMGYM_MODEL_NAME")) c.model.model = *v;
    if (auto v = get("FORMGYM_MODEL_KEY_ENV")) c.model.api_key_env = *v;
    check_config(c);
}

std::string_view session_status_name(SessionStatus status) {
    switch (status) {
        case SessionStatus::Active: return "active";
        case SessionStatus::Submitted: return "submitted";
        case SessionStatus::Expired: return "expired";
    }
    return "active";
}

// --- service ------------------------------------------------------------------------

struct Service::Session {
    std::mutex mutex;
    std::string id;
    std::chrono::system_clock::time_point created_at;
    std::chrono::system_clock::time_point last_active;
    SessionRequest request;
    Theme theme;
    EnvState state;
    EpisodeLog log;
    bool finalized = false;
    bool expired = false;
    std::optional<ScoreReport> report;

    SessionStatus status() const {
        if (expired) return SessionStatus::Expired;
        if (finalized || state.submitted) return SessionStatus::Submitted;
        return SessionStatus::Active;
    }
};

namespace {

std::string iso_time(std::chrono::system_clock::time_point t) {
    const std::time_t tt = std::chrono::system_clock::to_time_t(t);
    std::tm tm{};
    gmtime_r(&tt, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

json event_json(const StepEvent& e) {
    json j;
    j["kind"] = step_event_kind_name(e.kind);
    j["field_id"] = e.field_id ? json(*e.field_id) : json(nullptr);
    j["detail"] = e.detail;
    return j;
}

std::vector<Theme> load_themes_dir(const std::string& dir) {
    std::vector<fs::path> paths;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.path().extension() == ".theme") paths.push_back(entry.path());
    }
    std::sort(paths.begin(), paths.end());
    std::vector<Theme> out;
    for (const auto& p : paths) {
        std::ifstream in(p);
        std::stringstream ss;
        ss << in.rdbuf();
        out.push_back(load_theme(ss.str()));
    }
    if (out.empty()) throw Error(ErrorCode::Io, "no .theme files in " + dir);
    return out;
}

}  // namespace

Service::Service(ServiceConfig config, std::vector<FormSchema> catalog, std::vector<Theme> themes, Dataset dataset,
                 Clock clock)
    : config_(std::move(config)),
      catalog_(std::move(catalog)),
      themes_(std::move(themes)),
      dataset_(std::move(dataset)),
      clock_(std::move(clock)) {
    check_config(config_);
    for (const auto& form : catalog_) schemas_[form.form_id] = std::make_shared<const FormSchema>(form);
    for (const auto& record : dataset_.records) {
        if (!schemas_.count(record.form_id)) {
            throw Error(ErrorCode::SchemaSampleMismatch,
                        "sample '" + record.sample_id + "' names unknown form '" + record.form_id + "'");
        }
        samples_[record.sample_id] = std::make_shared<const GoldRecord>(record);
    }
}

std::unique_ptr<Service> Service::from_config(const ServiceConfig& config) {
    std::vector<FormSchema> catalog = config.catalog_dir.empty() ? builtin_catalog() : load_catalog_dir(config.catalog_dir);
    std::vector<Theme> themes = config.themes_dir.empty() ? builtin_themes() : load_themes_dir(config.themes_dir);
    Dataset dataset;
    if (!config.dataset_path.empty()) {
        dataset = read_dataset(config.dataset_path);
        if (dataset.catalog_hash != catalog_hash(catalog)) {
            throw Error(ErrorCode::SchemaSampleMismatch, "dataset was generated from a different catalog");
        }
    } else {
        dataset = build_dataset(catalog, config.per_form_count, config.dataset_seed);
    }
    return std::make_unique<Service>(config, std::move(catalog), std::move(themes), std::move(dataset));
}

json Service::forms() const {
    json out = json::array();
    for (const auto& form : catalog_) {
        json f;
        f["form_id"] = form.form_id;
        f["name"] = form.name;
        f["domain_category"] = form.domain_category;
        f["page_count"] = form.page_count;
        f["field_count"] = form.fields.size();
        f["theme_id"] = form.theme_id;
        f["sample_count"] = dataset_.for_form(form.form_id).size();
        out.push_back(std::move(f));
    }
    return out;
}

json Service::samples(const std::string& form_id) const {
    if (!schemas_.count(form_id)) throw Error(ErrorCode::UnknownForm, "unknown form '" + form_id + "'");
    json out = json::array();
    for (const GoldRecord* r : dataset_.for_form(form_id)) {
        json s;
        s["sample_id"] = r->sample_id;
        s["provenance"] = provenance_name(r->provenance);
        s["context_document"] = r->context_document;
        out.push_back(std::move(s));
    }
    return out;
}

json Service::create_session(const SessionRequest& request) {
    const auto schema_it = schemas_.find(request.form_id);
    if (schema_it == schemas_.end()) throw Error(ErrorCode::UnknownForm, "unknown form '" + request.form_id + "'");
    const auto sample_it = samples_.find(request.sample_id);
    if (sample_it == samples_.end()) {
        throw Error(ErrorCode::UnknownSample, "unknown sample '" + request.sample_id + "'");
    }
    if (sample_it->second->form_id != request.form_id) {
        throw Error(ErrorCode::SchemaSampleMismatch,
                    "sample '" + request.sample_id + "' belongs to form '" + sample_it->second->form_id + "'");
    }
    const std::string theme_id = request.theme_id.value_or(schema_it->second->theme_id);
    const Theme* theme = find_theme(themes_, theme_id);
    if (!theme) throw Error(ErrorCode::InvalidArgument, "unknown theme '" + theme_id + "'");

    auto session = std::make_shared<Session>();
    session->id = random_hex(16);
    session->created_at = session->last_active = clock_();
    session->request = request;
    session->request.theme_id = theme_id;
    session->theme = *theme;
    SessionConfig sc;
    sc.theme = *theme;
    sc.viewport = request.viewport;
    sc.ruler_on = request.ruler_on;
    sc.seed = request.seed;
    sc.step_cap = config_.step_cap;
    session->state = formgym::create_session(schema_it->second, sample_it->second, sc, session->id);

    SessionHeader& h = session->log.header;
    h.form_id = request.form_id;
    h.sample_id = request.sample_id;
    h.theme_id = theme_id;
    h.viewport = request.viewport;
    h.ruler_on = request.ruler_on;
    h.seed = request.seed;
    h.model = "service";
    session->log.initial_digest = bitmap_digest(observe(session->state).screenshot);

    {
        std::unique_lock lock(sessions_mutex_);
        sessions_[session->id] = session;
    }
    return session_info(session->id);
}

std::shared_ptr<Service::Session> Service::find(const std::string& session_id) {
    std::shared_ptr<Session> session;
    {
        std::shared_lock lock(sessions_mutex_);
        const auto it = sessions_.find(session_id);
        if (it == sessions_.end()) throw Error(ErrorCode::UnknownSession, "unknown session '" + session_id + "'");
        session = it->second;
    }
    return session;
}

namespace {

// Caller holds the session mutex. Submitted sessions never expire.
void touch_or_expire(auto& s, std::chrono::system_clock::time_point now, int timeout_seconds) {
    if (!s.expired && s.status() == SessionStatus::Active && now - s.last_active > std::chrono::seconds(timeout_seconds)) {
        s.expired = true;
    }
    if (s.expired) throw Error(ErrorCode::Expired, "session '" + s.id + "' expired after inactivity");
    s.last_active = now;
}

}  // namespace

json Service::session_info(const std::string& session_id) {
    auto session = find(session_id);
    std::lock_guard lock(session->mutex);
    Session& s = *session;
    json j;
    j["session_id"] = s.id;
    j["created_at"] = iso_time(s.created_at);
    j["status"] = session_status_name(s.status());
    json cfg;
    cfg["form_id"] = s.request.form_id;
    cfg["sample_id"] = s.request.sample_id;
    cfg["theme_id"] = *s.request.theme_id;
    cfg["viewport"] = {{"width", s.request.viewport.width}, {"height", s.request.viewport.height}};
    cfg["ruler_on"] = s.request.ruler_on;
    cfg["seed"] = s.request.seed;
    j["config"] = std::move(cfg);
    j["page_index"] = s.state.current_page;
    j["page_count"] = s.state.schema->page_count;
    j["step_count"] = s.state.step_count;
    j["context_document"] = s.state.sample->context_document;
    return j;
}

std::vector<std::uint8_t> Service::screenshot_png(const std::string& session_id) {
    auto session = find(session_id);
    std::lock_guard lock(session->mutex);
    touch_or_expire(*session, clock_(), config_.idle_timeout_seconds);
    return encode_png(observe(session->state).screenshot);
}

ActionBatchResult Service::post_actions(const std::string& session_id, const std::vector<Action>& actions,
                                        const std::optional<std::string>& raw_output) {
    auto session = find(session_id);
    std::lock_guard lock(session->mutex);
    Session& s = *session;
    touch_or_expire(s, clock_(), config_.idle_timeout_seconds);
    if (s.state.step_cap_reached) throw Error(ErrorCode::StepCapExceeded, "session reached its step cap");
    if (s.finalized || s.state.submitted) throw Error(ErrorCode::SessionTerminated, "session already submitted");

    ActionBatchResult out;
    const bool log_turn = !actions.empty() || (raw_output && !raw_output->empty());
    if (log_turn) {
        TurnRecord turn;
        turn.page_index = s.state.current_page;
        turn.screenshot_digest = bitmap_digest(observe(s.state).screenshot);
        turn.raw_output = raw_output ? *raw_output : format_actions(actions);
        turn.parsed = actions;
        for (const Action& action : actions) {
            // The remainder of a batch that ends the episode is dropped.
            if (s.state.submitted) break;
            StepOutcome outcome = step(s.state, action);
            s.state = std::move(outcome.state);
            turn.steps.push_back({action, outcome.event, bitmap_digest(observe(s.state).screenshot), false});
            out.events.push_back(outcome.event);
        }
        turn.model_turned_page = s.state.submitted || s.state.current_page != turn.page_index;
        s.log.turns.push_back(std::move(turn));
    }
    out.screenshot_digest = bitmap_digest(observe(s.state).screenshot);
    out.page_index = s.state.current_page;
    out.page_count = s.state.schema->page_count;
    out.step_count = s.state.step_count;
    out.status = s.status();
    return out;
}

void Service::finalize(Session& s) {
    s.finalized = true;
    s.log.status = s.state.step_cap_reached ? EpisodeStatus::StepCap : EpisodeStatus::Submitted;
    s.report = score_log(s.log, s.state.schema, s.state.sample, s.theme);
    if (!config_.log_dir.empty()) {
        fs::create_directories(config_.log_dir);
        write_log(s.log, (fs::path(config_.log_dir) / (s.id + ".jsonl")).string());
    }
}

ScoreReport Service::submit(const std::string& session_id) {
    auto session = find(session_id);
    std::lock_guard lock(session->mutex);
    Session& s = *session;
    touch_or_expire(s, clock_(), config_.idle_timeout_seconds);
    if (s.finalized) throw Error(ErrorCode::AlreadySubmitted, "session already submitted");
    finalize(s);
    return *s.report;
}

ScoreReport Service::report(const std::string& session_id) {
    auto session = find(session_id);
    std::lock_guard lock(session->mutex);
    if (!session->finalized) throw Error(ErrorCode::NotSubmitted, "report is available after submit");
    return *session->report;
}

std::optional<EpisodeLog> Service::episode_log(const std::string& session_id) {
    auto session = find(session_id);
    std::lock_guard lock(session->mutex);
    if (!session->finalized) return std::nullopt;
    return session->log;
}

std::vector<std::uint8_t> Service::frame_png(const std::string& session_id, std::size_t step_index) {
    auto session = find(session_id);
    EpisodeLog log;
    std::shared_ptr<const FormSchema> schema;
    std::shared_ptr<const GoldRecord> sample;
    Theme theme;
    {
        std::lock_guard lock(session->mutex);
        touch_or_expire(*session, clock_(), config_.idle_timeout_seconds);
        log = session->log;
        schema = session->state.schema;
        sample = session->state.sample;
        theme = session->theme;
    }
    if (step_index > log.step_count()) {
        throw Error(ErrorCode::InvalidArgument, "frame " + std::to_string(step_index) + " is past the last step");
    }
    SessionConfig sc;
    sc.theme = theme;
    sc.viewport = log.header.viewport;
    sc.ruler_on = log.header.ruler_on;
    sc.seed = log.header.seed;
    sc.step_cap = config_.step_cap;
    EnvState state = formgym::create_session(schema, sample, sc, session_id);
    std::size_t k = 0;
    for (const auto& turn : log.turns) {
        for (const auto& st : turn.steps) {
            if (k++ == step_index) return encode_png(observe(state).screenshot);
            state = step(state, st.action).state;
        }
    }
    return encode_png(observe(state).screenshot);
}

int Service::expire_idle() {
    std::vector<std::shared_ptr<Session>> all;
    {
        std::shared_lock lock(sessions_mutex_);
        for (const auto& [id, s] : sessions_) all.push_back(s);
    }
    const auto now = clock_();
    int count = 0;
    for (auto& s : all) {
        std::lock_guard lock(s->mutex);
        if (!s->expired && s->status() == SessionStatus::Active &&
            now - s->last_active > std::chrono::seconds(config_.idle_timeout_seconds)) {
            s->expired = true;
            ++count;
        }
    }
    return count;
}

// --- HTTP ---------------------------------------------------------------------------

int http_status_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::UnknownForm:
        case ErrorCode::UnknownSample:
        case ErrorCode::UnknownSession:
        case ErrorCode::UnknownField:
            return 404;
        case ErrorCode::Expired:
            return 410;
        case ErrorCode::SessionTerminated:
        case ErrorCode::AlreadySubmitted:
        case ErrorCode::NotSubmitted:
        case ErrorCode::StepCapExceeded:
            return 409;
        case ErrorCode::MalformedDocument:
        case ErrorCode::InvalidArgument:
        case ErrorCode::ViewportTooSmall:
        case ErrorCode::SchemaSampleMismatch:
        case ErrorCode::InvalidFieldValue:
            return 400;
        default:
            return 500;
    }
}

namespace {

void send_json(httplib::Response& res, const json& body, int status = 200) {
    res.status = status;
    res.set_content(body.dump(), "application/json");
}

void send_error(httplib::Response& res, ErrorCode code, const std::string& message) {
    send_json(res, json{{"error", error_code_name(code)}, {"message", message}}, http_status_for(code));
}

json parse_body(const httplib::Request& req) {
    if (req.body.empty()) return json::object();
    try {
        json j = json::parse(req.body);
        if (!j.is_object()) throw Error(ErrorCode::MalformedDocument, "request body must be a JSON object");
        return j;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::MalformedDocument, std::string("request body: ") + e.what());
    }
}

SessionRequest session_request(const json& j) {
    SessionRequest r;
    try {
        r.form_id = j.at("form_id").get<std::string>();
        r.sample_id = j.at("sample_id").get<std::string>();
        if (j.contains("theme_id") && !j["theme_id"].is_null()) r.theme_id = j["theme_id"].get<std::string>();
        if (j.contains("viewport")) {
            r.viewport.width = j["viewport"].at("width").get<int>();
            r.viewport.height = j["viewport"].at("height").get<int>();
        }
        r.ruler_on = j.value("ruler_on", false);
        r.seed = j.value("seed", std::uint64_t{0});
    } catch (const json::exception& e) {
        throw Error(ErrorCode::InvalidArgument, std::string("session config: ") + e.what());
    }
    return r;
}

// Body is either {"text": "<model output>"} (parsed leniently) or
// {"actions": ["CLICK(x, y)", ...], "raw_output"?: "..."} (each entry strict).
std::pair<std::vector<Action>, std::optional<std::string>> batch_from(const json& j, json& diagnostics) {
    std::vector<Action> actions;
    std::optional<std::string> raw;
    try {
        if (j.contains("text")) {
            raw = j["text"].get<std::string>();
            ActionSequence seq = parse_actions(*raw);
            for (const auto& d : seq.diagnostics) diagnostics.push_back({{"line_no", d.line_no}, {"message", d.message}});
            return {std::move(seq.actions), raw};
        }
        if (j.contains("raw_output")) raw = j["raw_output"].get<std::string>();
        for (const auto& entry : j.value("actions", json::array())) {
            const std::string line = entry.get<std::string>();
            ActionSequence seq = parse_actions(line);
            if (seq.actions.size() != 1 || !seq.diagnostics.empty()) {
                throw Error(ErrorCode::InvalidArgument, "not a single action: '" + line + "'");
            }
            actions.push_back(std::move(seq.actions.front()));
        }
    } catch (const json::exception& e) {
        throw Error(ErrorCode::InvalidArgument, std::string("actions: ") + e.what());
    }
    return {std::move(actions), raw};
}

template <typename Fn>
httplib::Server::Handler guarded(Fn fn) {
    return [fn](const httplib::Request& req, httplib::Response& res) {
        try {
            fn(req, res);
        } catch (const Error& e) {
            send_error(res, e.code(), e.what());
        } catch (const std::exception& e) {
            send_error(res, ErrorCode::Io, e.what());
        }
    };
}

}  // namespace

void mount_routes(httplib::Server& server, Service& service) {
    server.Post("/sessions", guarded([&](const httplib::Request& req, httplib::Response& res) {
        send_json(res, service.create_session(session_request(parse_body(req))), 201);
    }));
    server.Get(R"(/sessions/([0-9a-f]+))", guarded([&](const httplib::Request& req, httplib::Response& res) {
        send_json(res, service.session_info(req.matches[1]));
    }));
    server.Get(R"(/sessions/([0-9a-f]+)/screenshot)", guarded([&](const httplib::Request& req, httplib::Response& res) {
        const auto png = service.screenshot_png(req.matches[1]);
        res.set_content(std::string(png.begin(), png.end()), "image/png");
    }));
    server.Get(R"(/sessions/([0-9a-f]+)/frames/(\d+))", guarded([&](const httplib::Request& req, httplib::Response& res) {
        const auto png = service.frame_png(req.matches[1], std::stoull(req.matches[2]));
        res.set_content(std::string(png.begin(), png.end()), "image/png");
    }));
    server.Post(R"(/sessions/([0-9a-f]+)/actions)", guarded([&](const httplib::Request& req, httplib::Response& res) {
        json diagnostics = json::array();
        auto [actions, raw] = batch_from(parse_body(req), diagnostics);
        const ActionBatchResult r = service.post_actions(req.matches[1], actions, raw);
        json events = json::array();
        for (const auto& e : r.events) events.push_back(event_json(e));
        send_json(res, json{{"events", std::move(events)},
                            {"diagnostics", std::move(diagnostics)},
                            {"screenshot_digest", r.screenshot_digest},
                            {"page_index", r.page_index},
                            {"page_count", r.page_count},
                            {"step_count", r.step_count},
                            {"status", session_status_name(r.status)}});
    }));
    server.Post(R"(/sessions/([0-9a-f]+)/submit)", guarded([&](const httplib::Request& req, httplib::Response& res) {
        res.set_content(report_to_json(service.submit(req.matches[1])), "application/json");
    }));
    server.Get(R"(/sessions/([0-9a-f]+)/report)", guarded([&](const httplib::Request& req, httplib::Response& res) {
        res.set_content(report_to_json(service.report(req.matches[1])), "application/json");
    }));
    server.Get(R"(/sessions/([0-9a-f]+)/log)", guarded([&](const httplib::Request& req, httplib::Response& res) {
        const auto log = service.episode_log(req.matches[1]);
        if (!log) throw Error(ErrorCode::NotSubmitted, "log is available after submit");
        res.set_content(serialize_log(*log), "application/x-ndjson");
    }));
    server.Get("/forms", guarded([&](const httplib::Request&, httplib::Response& res) {
        send_json(res, service.forms());
    }));
    server.Get(R"(/forms/([A-Za-z0-9_\-]+)/samples)", guarded([&](const httplib::Request& req, httplib::Response& res) {
        send_json(res, service.samples(req.matches[1]));
    }));
}

void serve(Service& service) {
    httplib::Server server;
    mount_routes(server, service);
    std::atomic<bool> running{true};
    std::thread reaper([&] {
        while (running) {
            for (int i = 0; i < 60 && running; ++i) std::this_thread::sleep_for(std::chrono::seconds(1));
            service.expire_idle();
        }
    });
    const bool ok = server.listen(service.config().host, service.config().port);
    running = false;
    reaper.join();
    if (!ok) {
        throw Error(ErrorCode::Io, "cannot listen on " + service.config().host + ":" +
                                       std::to_string(service.config().port));
    }
}

}  // namespace formgym
