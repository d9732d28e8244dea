// formgym command-line surface. Exit codes: 0 success, 1 partial failures,
// 2 configuration error.
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "formgym/agent.hpp"
#include "formgym/datagen.hpp"
#include "formgym/digest.hpp"
#include "formgym/error.hpp"
#include "formgym/model_client.hpp"
#include "formgym/server.hpp"

namespace fs = std::filesystem;
using namespace formgym;

namespace {

constexpr int kOk = 0;
constexpr int kPartial = 1;
constexpr int kConfigError = 2;

// Raised for bad flags or unusable inputs detected before any work starts.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Sources {
    std::string catalog_dir;
    std::string themes_dir;
    std::string dataset_path;
    std::uint64_t seed = 42;
    int per_form = 50;

    void add_to(CLI::App& cmd, bool with_dataset) {
        cmd.add_option("--catalog-dir", catalog_dir, "Directory of .form files (default: built-in catalog)");
        cmd.add_option("--themes-dir", themes_dir, "Directory of .theme files (default: built-in themes)");
        if (with_dataset) {
            cmd.add_option("--dataset", dataset_path, "Dataset JSONL (default: generate from --seed/--per-form)");
            cmd.add_option("--seed", seed, "Dataset seed when generating");
            cmd.add_option("--per-form", per_form, "Samples per form when generating")->check(CLI::PositiveNumber);
        }
    }

    std::vector<FormSchema> catalog() const {
        return catalog_dir.empty() ? builtin_catalog() : load_catalog_dir(catalog_dir);
    }

    std::vector<Theme> themes() const {
        if (themes_dir.empty()) return builtin_themes();
        std::vector<Theme> out;
        for (const auto& entry : fs::directory_iterator(themes_dir)) {
            if (entry.path().extension() != ".theme") continue;
            std::ifstream in(entry.path());
            std::stringstream ss;
            ss << in.rdbuf();
            out.push_back(load_theme(ss.str()));
        }
        if (out.empty()) throw ConfigError("no .theme files in " + themes_dir);
        return out;
    }

    Dataset dataset(const std::vector<FormSchema>& forms) const {
        if (dataset_path.empty()) return build_dataset(forms, per_form, seed);
        Dataset d = read_dataset(dataset_path);
        if (d.catalog_hash != catalog_hash(forms)) throw ConfigError("dataset was generated from a different catalog");
        return d;
    }
};

std::unique_ptr<ModelClient> make_client(const std::string& choice, const ModelEndpoint& endpoint, std::uint64_t seed) {
    if (choice == "oracle") return std::make_unique<OracleClient>();
    if (choice == "noisy") return std::make_unique<NoisyClient>(seed);
    if (choice == "random") return std::make_unique<RandomClickClient>(seed);
    if (choice.rfind("fixture:", 0) == 0) return std::make_unique<FixtureClient>(FixtureClient::from_file(choice.substr(8)));
    if (choice == "http") {
        if (endpoint.base_url.empty() || endpoint.model.empty()) {
            throw ConfigError("--model http needs --model-url and --model-name");
        }
        return std::make_unique<HttpModelClient>(endpoint);
    }
    throw ConfigError("unknown model '" + choice + "' (oracle, noisy, random, fixture:<path>, http)");
}

void print_table(const std::vector<ScoreReport>& reports) {
    for (Protocol protocol : {Protocol::StateStrict, Protocol::OutputScan}) {
        std::printf("%s\n", std::string(protocol_name(protocol)).c_str());
        std::printf("  %-16s %8s %8s %8s\n", "bucket", "fields", "click", "value");
        const auto pooled = pooled_bucket_scores(reports, protocol);
        for (const auto& bucket : report_buckets()) {
            const auto it = pooled.find(std::string(bucket.name));
            if (it == pooled.end()) continue;
            std::printf("  %-16s %8d %8.3f %8.3f\n", std::string(bucket.name).c_str(), it->second.field_count,
                        it->second.click_acc, it->second.value_acc);
        }
        double click = 0.0;
        double value = 0.0;
        for (const auto& r : reports) {
            click += r.summary(protocol).episodic_click;
            value += r.summary(protocol).episodic_value;
        }
        if (!reports.empty()) {
            std::printf("  episodic click %.3f  episodic value %.3f\n", click / reports.size(), value / reports.size());
        }
    }
}

void write_text(const std::string& path, const std::string& text) {
    if (fs::path(path).has_parent_path()) fs::create_directories(fs::path(path).parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + path);
    out << text;
}

struct LogContext {
    std::shared_ptr<const FormSchema> schema;
    std::shared_ptr<const GoldRecord> sample;
    Theme theme;
};

LogContext context_for(const EpisodeLog& log, const std::vector<FormSchema>& forms, const std::vector<Theme>& themes,
                       const Dataset& dataset) {
    const FormSchema* form = find_form(forms, log.header.form_id);
    if (!form) throw Error(ErrorCode::UnknownForm, "log names unknown form '" + log.header.form_id + "'");
    const GoldRecord* record = dataset.find(log.header.sample_id);
    if (!record) throw Error(ErrorCode::UnknownSample, "log names unknown sample '" + log.header.sample_id + "'");
    const Theme* theme = find_theme(themes, log.header.theme_id);
    if (!theme) throw Error(ErrorCode::InvalidArgument, "log names unknown theme '" + log.header.theme_id + "'");
    return {std::make_shared<const FormSchema>(*form), std::make_shared<const GoldRecord>(*record), *theme};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"formgym: form-filling benchmark environment"};
    app.require_subcommand(1);

    // serve
    auto* serve_cmd = app.add_subcommand("serve", "Run the session service");
    std::string config_path;
    serve_cmd->add_option("--config", config_path, "JSON config file; FORMGYM_* variables override it");

    // generate-dataset
    auto* gen_cmd = app.add_subcommand("generate-dataset", "Build the (document, gold values) dataset");
    Sources gen_src;
    gen_src.add_to(*gen_cmd, false);
    std::string gen_out;
    std::uint64_t gen_seed = 42;
    int gen_per_form = 50;
    int gen_jobs = 1;
    std::string gen_metadata;
    ModelEndpoint gen_endpoint;
    gen_cmd->add_option("--out", gen_out, "Output JSONL path")->required();
    gen_cmd->add_option("--seed", gen_seed, "Dataset seed");
    gen_cmd->add_option("--per-form", gen_per_form, "Samples per form")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--jobs", gen_jobs, "Worker threads for templated generation")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--metadata", gen_metadata, "Paper-metadata JSONL replacing the paper_submission samples");
    gen_cmd->add_option("--generator-url", gen_endpoint.base_url, "Chat-completions endpoint for documents");
    gen_cmd->add_option("--generator-model", gen_endpoint.model, "Model name for the generator");

    // run-eval
    auto* eval_cmd = app.add_subcommand("run-eval", "Run episodes over a dataset slice");
    Sources eval_src;
    eval_src.add_to(*eval_cmd, true);
    std::string eval_model = "oracle";
    ModelEndpoint eval_endpoint;
    std::vector<std::string> eval_forms;
    std::vector<std::string> eval_themes;
    int eval_limit = 1;
    bool eval_ruler = false;
    std::string eval_csv;
    std::string eval_logs;
    std::uint64_t eval_session_seed = 0;
    eval_cmd->add_option("--model", eval_model, "oracle | noisy | random | fixture:<path> | http");
    eval_cmd->add_option("--model-url", eval_endpoint.base_url, "Chat-completions base URL for --model http");
    eval_cmd->add_option("--model-name", eval_endpoint.model, "Model name for --model http");
    eval_cmd->add_option("--api-key-env", eval_endpoint.api_key_env, "Environment variable holding the API key");
    eval_cmd->add_option("--forms", eval_forms, "Form ids (default: all)");
    eval_cmd->add_option("--themes", eval_themes, "Theme ids (default: each form's own theme)");
    eval_cmd->add_option("--limit", eval_limit, "Samples per form")->check(CLI::PositiveNumber);
    eval_cmd->add_flag("--ruler", eval_ruler, "Overlay the coordinate ruler");
    eval_cmd->add_option("--session-seed", eval_session_seed, "Session seed recorded in logs");
    eval_cmd->add_option("--csv", eval_csv, "Per-field verdict CSV");
    eval_cmd->add_option("--log-dir", eval_logs, "Directory for episode logs");

    // score
    auto* score_cmd = app.add_subcommand("score", "Re-score episode logs");
    Sources score_src;
    score_src.add_to(*score_cmd, true);
    std::vector<std::string> score_logs;
    std::string score_csv;
    bool score_json = false;
    score_cmd->add_option("logs", score_logs, "Episode log files")->required()->check(CLI::ExistingFile);
    score_cmd->add_option("--csv", score_csv, "Per-field verdict CSV");
    score_cmd->add_flag("--json", score_json, "Print each report as JSON");

    // replay
    auto* replay_cmd = app.add_subcommand("replay", "Re-render an episode log to PNG frames");
    Sources replay_src;
    replay_src.add_to(*replay_cmd, true);
    std::string replay_log_path;
    std::string replay_out;
    replay_cmd->add_option("log", replay_log_path, "Episode log")->required()->check(CLI::ExistingFile);
    replay_cmd->add_option("--out-dir", replay_out, "Directory for frame_NNNN.png files")->required();

    // export-catalog
    auto* export_cmd = app.add_subcommand("export-catalog", "Write the built-in forms and themes as files");
    std::string export_forms;
    std::string export_themes;
    export_cmd->add_option("--forms-dir", export_forms, "Destination for .form files")->required();
    export_cmd->add_option("--themes-dir", export_themes, "Destination for .theme files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kConfigError;
    }

    try {
        if (*serve_cmd) {
            ServiceConfig config = load_service_config(config_path);
            apply_env_overrides(config, [](const char* name) { return std::getenv(name); });
            auto service = Service::from_config(config);
            std::fprintf(stderr, "formgym: %zu forms, %zu samples, listening on %s:%d\n", service->catalog().size(),
                         service->dataset().records.size(), config.host.c_str(), config.port);
            serve(*service);
            return kOk;
        }

        if (*gen_cmd) {
            const auto forms = gen_src.catalog();
            std::unique_ptr<HttpTextGenerator> generator;
            if (!gen_endpoint.base_url.empty()) generator = std::make_unique<HttpTextGenerator>(gen_endpoint);
            Dataset dataset = build_dataset(forms, gen_per_form, gen_seed, generator.get(), gen_jobs);
            if (!gen_metadata.empty()) {
                const FormSchema* paper = find_form(forms, kPaperSubmissionFormId);
                if (!paper) throw ConfigError("catalog has no paper_submission form");
                substitute_ingested(dataset, ingest_metadata_records(read_metadata_jsonl(gen_metadata), *paper));
            }
            int problems = 0;
            for (const auto& record : dataset.records) {
                for (const auto& p : check_record(*find_form(forms, record.form_id), record)) {
                    std::fprintf(stderr, "%s: %s\n", record.sample_id.c_str(), p.c_str());
                    ++problems;
                }
            }
            write_dataset(dataset, gen_out);
            std::printf("%zu samples, %zu field-value pairs -> %s\n", dataset.records.size(), dataset.pair_count(),
                        gen_out.c_str());
            return problems ? kPartial : kOk;
        }

        if (*eval_cmd) {
            const auto forms = eval_src.catalog();
            const auto themes = eval_src.themes();
            const Dataset dataset = eval_src.dataset(forms);
            for (const auto& id : eval_forms) {
                if (!find_form(forms, id)) throw ConfigError("unknown form '" + id + "'");
            }
            for (const auto& id : eval_themes) {
                if (!find_theme(themes, id)) throw ConfigError("unknown theme '" + id + "'");
            }
            make_client(eval_model, eval_endpoint, 0);  // validate the model choice up front

            std::ofstream csv;
            if (!eval_csv.empty()) {
                if (fs::path(eval_csv).has_parent_path()) fs::create_directories(fs::path(eval_csv).parent_path());
                csv.open(eval_csv);
                csv << csv_header("form_id,sample_id,theme_id");
            }
            if (!eval_logs.empty()) fs::create_directories(eval_logs);

            std::vector<ScoreReport> reports;
            int failures = 0;
            std::uint64_t episode = 0;
            for (const auto& form : forms) {
                if (!eval_forms.empty() && std::find(eval_forms.begin(), eval_forms.end(), form.form_id) == eval_forms.end()) {
                    continue;
                }
                auto schema = std::make_shared<const FormSchema>(form);
                const auto records = dataset.for_form(form.form_id);
                const std::size_t count = std::min<std::size_t>(records.size(), eval_limit);
                const std::vector<std::string> theme_ids = eval_themes.empty() ? std::vector<std::string>{form.theme_id}
                                                                               : eval_themes;
                for (std::size_t i = 0; i < count; ++i) {
                    auto sample = std::make_shared<const GoldRecord>(*records[i]);
                    for (const auto& theme_id : theme_ids) {
                        const std::string key = form.form_id + "," + sample->sample_id + "," + theme_id;
                        try {
                            SessionConfig sc;
                            sc.theme = *find_theme(themes, theme_id);
                            sc.ruler_on = eval_ruler;
                            sc.seed = eval_session_seed;
                            auto client = make_client(eval_model, eval_endpoint, eval_session_seed + episode++);
                            EpisodeResult r = run_episode(*client, create_session(schema, sample, sc));
                            if (r.log.status == EpisodeStatus::Aborted) {
                                std::fprintf(stderr, "%s: aborted: %s\n", key.c_str(), r.log.abort_reason.c_str());
                                ++failures;
                            }
                            if (!eval_logs.empty()) {
                                write_log(r.log, (fs::path(eval_logs) / (sample->sample_id + "." + theme_id + ".jsonl")).string());
                            }
                            if (csv.is_open()) csv << report_csv_rows(r.report, key);
                            reports.push_back(std::move(r.report));
                        } catch (const Error& e) {
                            std::fprintf(stderr, "%s: %s: %s\n", key.c_str(),
                                         std::string(error_code_name(e.code())).c_str(), e.what());
                            ++failures;
                        }
                    }
                }
            }
            std::printf("%zu episodes, %d failed\n", reports.size() + failures, failures);
            print_table(reports);
            return failures ? kPartial : kOk;
        }

        if (*score_cmd) {
            const auto forms = score_src.catalog();
            const auto themes = score_src.themes();
            const Dataset dataset = score_src.dataset(forms);
            std::ofstream csv;
            if (!score_csv.empty()) {
                csv.open(score_csv);
                csv << csv_header("log");
            }
            std::vector<ScoreReport> reports;
            int failures = 0;
            for (const auto& path : score_logs) {
                try {
                    const EpisodeLog log = read_log(path);
                    const LogContext ctx = context_for(log, forms, themes, dataset);
                    ScoreReport report = score_log(log, ctx.schema, ctx.sample, ctx.theme);
                    if (score_json) std::printf("%s\n", report_to_json(report).c_str());
                    if (csv.is_open()) csv << report_csv_rows(report, fs::path(path).filename().string());
                    reports.push_back(std::move(report));
                } catch (const Error& e) {
                    std::fprintf(stderr, "%s: %s\n", path.c_str(), e.what());
                    ++failures;
                }
            }
            if (!score_json) print_table(reports);
            return failures ? kPartial : kOk;
        }

        if (*replay_cmd) {
            const auto forms = replay_src.catalog();
            const auto themes = replay_src.themes();
            const Dataset dataset = replay_src.dataset(forms);
            const EpisodeLog log = read_log(replay_log_path);
            const LogContext ctx = context_for(log, forms, themes, dataset);
            SessionConfig sc;
            sc.theme = ctx.theme;
            sc.viewport = log.header.viewport;
            sc.ruler_on = log.header.ruler_on;
            sc.seed = log.header.seed;
            EnvState state = create_session(ctx.schema, ctx.sample, sc);
            fs::create_directories(replay_out);
            int frame = 0;
            int mismatches = 0;
            auto emit = [&](const std::string& expected) {
                const Bitmap shot = observe(state).screenshot;
                if (!expected.empty() && bitmap_digest(shot) != expected) ++mismatches;
                const auto png = encode_png(shot);
                char name[32];
                std::snprintf(name, sizeof name, "frame_%04d.png", frame++);
                write_text((fs::path(replay_out) / name).string(), std::string(png.begin(), png.end()));
            };
            emit(log.initial_digest);
            for (const auto& turn : log.turns) {
                for (const auto& s : turn.steps) {
                    state = step(state, s.action).state;
                    emit(s.screenshot_digest);
                }
            }
            std::printf("%d frames -> %s, %d digest mismatches\n", frame, replay_out.c_str(), mismatches);
            return mismatches ? kPartial : kOk;
        }

        if (*export_cmd) {
            write_catalog_dir(builtin_catalog(), export_forms);
            if (!export_themes.empty()) {
                fs::create_directories(export_themes);
                for (const auto& theme : builtin_themes()) {
                    write_text((fs::path(export_themes) / (theme.theme_id + ".theme")).string(), serialize_theme(theme));
                }
            }
            return kOk;
        }
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "formgym: %s\n", e.what());
        return kConfigError;
    } catch (const Error& e) {
        std::fprintf(stderr, "formgym: %s: %s\n", std::string(error_code_name(e.code())).c_str(), e.what());
        switch (e.code()) {
            case ErrorCode::InvalidArgument:
            case ErrorCode::MalformedDocument:
            case ErrorCode::InvariantViolation:
            case ErrorCode::SchemaSampleMismatch:
            case ErrorCode::Io:
                return kConfigError;
            default:
                return kPartial;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "formgym: %s\n", e.what());
        return kConfigError;
    }
    return kOk;
}
