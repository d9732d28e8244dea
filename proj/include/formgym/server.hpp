#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "formgym/agent.hpp"
#include "formgym/datagen.hpp"
#include "formgym/model_client.hpp"

namespace httplib {
class Server;
}

namespace formgym {

struct ServiceConfig {
    std::string host = "127.0.0.1";
    int port = 8080;
    std::string dataset_path;  // empty: build a templated dataset in memory
    std::uint64_t dataset_seed = 42;
    int per_form_count = 50;
    std::string catalog_dir;  // empty: built-in catalog
    std::string themes_dir;   // empty: built-in themes
    int step_cap = kDefaultStepCap;
    int idle_timeout_seconds = 30 * 60;
    std::string log_dir;  // episode logs land here on submit; empty disables
    ModelEndpoint model;
};

/// Reads a JSON config file (unknown keys rejected). Empty path = defaults.
ServiceConfig load_service_config(const std::string& path);
/// FORMGYM_HOST, FORMGYM_PORT, FORMGYM_DATASET, FORMGYM_SEED, FORMGYM_CATALOG_DIR,
/// FORMGYM_THEMES_DIR, FORMGYM_STEP_CAP, FORMGYM_IDLE_TIMEOUT, FORMGYM_LOG_DIR,
/// FORMGYM_MODEL_URL, FORMGYM_MODEL_NAME, FORMGYM_MODEL_KEY_ENV.
void apply_env_overrides(ServiceConfig& config,
                         const std::function<const char*(const char*)>& getenv_fn);

enum class SessionStatus { Active, Submitted, Expired };
std::string_view session_status_name(SessionStatus status);

struct SessionRequest {
    std::string form_id;
    std::string sample_id;
    std::optional<std::string> theme_id;  // default: the form's theme
    Viewport viewport = kDefaultViewport;
    bool ruler_on = false;
    std::uint64_t seed = 0;
};

struct ActionBatchResult {
    std::vector<StepEvent> events;
    std::string screenshot_digest;
    int page_index = 0;
    int page_count = 1;
    int step_count = 0;
    SessionStatus status = SessionStatus::Active;
};

/// Session store behind the wire API. Every public method is thread-safe;
/// calls on one session are serialized by that session's mutex.
class Service {
public:
    using Clock = std::function<std::chrono::system_clock::time_point()>;

    Service(ServiceConfig config, std::vector<FormSchema> catalog, std::vector<Theme> themes, Dataset dataset,
            Clock clock = [] { return std::chrono::system_clock::now(); });

    /// Loads catalog, themes and dataset as the config directs.
    static std::unique_ptr<Service> from_config(const ServiceConfig& config);

    const ServiceConfig& config() const { return config_; }
    const std::vector<FormSchema>& catalog() const { return catalog_; }
    const Dataset& dataset() const { return dataset_; }

    nlohmann::json forms() const;
    /// Sample ids and context documents; never gold values.
    nlohmann::json samples(const std::string& form_id) const;

    nlohmann::json create_session(const SessionRequest& request);
    nlohmann::json session_info(const std::string& session_id);
    std::vector<std::uint8_t> screenshot_png(const std::string& session_id);
    /// `raw_output` is the model text the actions were parsed from; when absent
    /// the batch is logged as its DSL rendering (typed text for human input).
    ActionBatchResult post_actions(const std::string& session_id, const std::vector<Action>& actions,
                                   const std::optional<std::string>& raw_output = std::nullopt);
    ScoreReport submit(const std::string& session_id);
    /// Post-submit only.
    ScoreReport report(const std::string& session_id);
    std::optional<EpisodeLog> episode_log(const std::string& session_id);
    /// Screenshot before logged step `step_index` (0 = initial frame), rebuilt
    /// from the session log; `step_count` gives the current frame.
    std::vector<std::uint8_t> frame_png(const std::string& session_id, std::size_t step_index);

    /// Marks sessions idle longer than the timeout as expired; returns how many.
    int expire_idle();

private:
    struct Session;

    std::shared_ptr<Session> find(const std::string& session_id);
    void finalize(Session& session);

    ServiceConfig config_;
    std::vector<FormSchema> catalog_;
    std::vector<Theme> themes_;
    Dataset dataset_;
    Clock clock_;
    std::map<std::string, std::shared_ptr<const FormSchema>> schemas_;
    std::map<std::string, std::shared_ptr<const GoldRecord>> samples_;
    std::shared_mutex sessions_mutex_;
    std::map<std::string, std::shared_ptr<Session>> sessions_;
};

/// HTTP status for a library error code.
int http_status_for(ErrorCode code);

/// Registers every endpoint of the wire API on `server`.
void mount_routes(httplib::Server& server, Service& service);

/// Blocks serving on config().host:port until the server is stopped.
void serve(Service& service);

}  // namespace formgym
