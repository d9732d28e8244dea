#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "formgym/action.hpp"
#include "formgym/env.hpp"
#include "formgym/random.hpp"
#include "formgym/scoring.hpp"

namespace formgym {

inline constexpr std::string_view kPromptVersion = "form-agent-v1";

struct Prompt {
    std::string text;
    std::vector<std::uint8_t> png;

    /// SHA-256 over text, a NUL separator, then the image bytes.
    std::string digest() const;
};

Prompt build_prompt(std::string_view context_document, const Observation& observation, bool ruler_hint);

/// Text in, text out; one call per form page. Implementations throw
/// Error(ModelUnavailable) once their own retry budget is spent.
class ModelClient {
public:
    virtual ~ModelClient() = default;
    virtual std::string complete(const Prompt& prompt) = 0;
    virtual std::string name() const = 0;
    /// Called before each page with the live session. Only scripted test
    /// agents use it; real model clients must ignore it.
    virtual void before_page(const EnvState& /*state*/) {}
};

// --- episode log --------------------------------------------------------------

struct SessionHeader {
    std::string form_id;
    std::string sample_id;
    std::string theme_id;
    Viewport viewport;
    bool ruler_on = false;
    std::uint64_t seed = 0;
    std::string model;
    std::string prompt_version{kPromptVersion};

    bool operator==(const SessionHeader&) const = default;
};

struct LoggedStep {
    Action action;
    StepEvent event;
    std::string screenshot_digest;  // after the action
    bool driver_forced = false;

    bool operator==(const LoggedStep&) const = default;
};

/// One model call (agent) or one posted batch (service).
struct TurnRecord {
    int page_index = 0;
    std::string prompt_digest;
    std::string raw_output;
    std::vector<Action> parsed;
    std::vector<Diagnostic> diagnostics;
    std::string screenshot_digest;  // observation the turn started from
    std::vector<LoggedStep> steps;
    bool model_turned_page = false;
    double model_seconds = 0.0;

    bool operator==(const TurnRecord&) const = default;
};

enum class EpisodeStatus { Running, Submitted, StepCap, Aborted };
std::string_view episode_status_name(EpisodeStatus status);

struct EpisodeLog {
    SessionHeader header;
    std::string initial_digest;
    std::vector<TurnRecord> turns;
    EpisodeStatus status = EpisodeStatus::Running;
    std::string abort_reason;

    std::size_t step_count() const;
    /// Concatenated raw model output of all turns.
    std::string raw_output() const;
};

std::string serialize_log(const EpisodeLog& log);
EpisodeLog parse_log(std::string_view text);
void write_log(const EpisodeLog& log, const std::string& path);
EpisodeLog read_log(const std::string& path);

struct EpisodeOptions {
    int max_retries = 2;  // transport retries around client.complete
    /// Record a screenshot digest after every step (otherwise only per turn).
    bool digest_every_step = true;
};

struct EpisodeResult {
    EpisodeLog log;
    ScoreReport report;
    EnvState final_state;
};

/// Greedy page-wise loop: one model call per page, execute everything parsed,
/// then press Next/Submit if the model did not.
EpisodeResult run_episode(ModelClient& client, const EnvState& session, const EpisodeOptions& options = {});

// --- replay and scoring of logs ------------------------------------------------

struct ReplayResult {
    EnvState final_state;
    std::vector<ActionRecord> history;
    std::vector<std::string> digests;  // initial, then one per step
    int digest_mismatches = 0;
};

/// Re-executes every logged action from a fresh session. Digest comparisons
/// only cover steps whose log entry carries a digest.
ReplayResult replay_log(const EpisodeLog& log, std::shared_ptr<const FormSchema> schema,
                        std::shared_ptr<const GoldRecord> sample, const Theme& theme);

/// Scores under both protocols. Output-scan reads `raw_output`.
ScoreReport score_episode(const EnvState& final_state, std::span<const ActionRecord> history,
                          std::string_view raw_output, const std::vector<StepEvent>& events);

/// Replays `log` and scores it the way run_episode does: driver-forced steps
/// are executed but not credited to the model.
ScoreReport score_log(const EpisodeLog& log, std::shared_ptr<const FormSchema> schema,
                      std::shared_ptr<const GoldRecord> sample, const Theme& theme);

// --- scripted agents (tests and baselines) --------------------------------------

/// Gold-knowing agent: Click/Type sequence that fills every scored field on
/// the current page, then presses the page's navigation button. Throws
/// UnfillableField when a gold value cannot be reached.
ActionSequence oracle_agent(const EnvState& state);

class OracleClient : public ModelClient {
public:
    std::string complete(const Prompt& prompt) override;
    std::string name() const override { return "oracle"; }
    void before_page(const EnvState& state) override;

private:
    std::optional<EnvState> state_;
};

struct NoiseConfig {
    double skip_field = 0.15;
    double typo = 0.2;
    double wrong_option = 0.2;
    double miss_click = 0.1;
    double chatter = 0.3;  // extra reasoning text mentioning gold values
};

/// Oracle with injected mistakes. Its output names every value it enters.
class NoisyClient : public ModelClient {
public:
    NoisyClient(std::uint64_t seed, NoiseConfig noise = {}) : stream_(seed), noise_(noise) {}
    std::string complete(const Prompt& prompt) override;
    std::string name() const override { return "noisy"; }
    void before_page(const EnvState& state) override;

private:
    RandomStream stream_;
    NoiseConfig noise_;
    std::optional<EnvState> state_;
};

/// Uniform random clicks over the viewport, `clicks_per_page` per page.
class RandomClickClient : public ModelClient {
public:
    RandomClickClient(std::uint64_t seed, int clicks_per_page = 20)
        : stream_(seed), clicks_per_page_(clicks_per_page) {}
    std::string complete(const Prompt& prompt) override;
    std::string name() const override { return "random"; }
    void before_page(const EnvState& state) override { viewport_ = state.config.viewport; }

private:
    RandomStream stream_;
    int clicks_per_page_;
    Viewport viewport_;
};

/// Replays recorded responses keyed by prompt digest.
class FixtureClient : public ModelClient {
public:
    explicit FixtureClient(std::map<std::string, std::string> responses) : responses_(std::move(responses)) {}
    static FixtureClient from_file(const std::string& path);
    static void append_to_file(const std::string& path, const std::string& prompt_digest,
                               const std::string& response);

    std::string complete(const Prompt& prompt) override;
    std::string name() const override { return "fixture"; }

private:
    std::map<std::string, std::string> responses_;
};

/// Share of uniformly random points over the viewport that land on each
/// field's interactive widgets.
std::map<std::string, double> random_click_rates(const LayoutTree& layout, int clicks, RandomStream& stream);
/// Area of each field's interactive boxes over the viewport area.
std::map<std::string, double> hit_area_ratios(const LayoutTree& layout);

}  // namespace formgym
