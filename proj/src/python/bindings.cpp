#include <memory>
#include <string>

#include <nlohmann/json.hpp>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "formgym/agent.hpp"
#include "formgym/datagen.hpp"
#include "formgym/env.hpp"
#include "formgym/error.hpp"
#include "formgym/scoring.hpp"

namespace py = pybind11;
using namespace formgym;

namespace {

// Structured values cross the boundary as JSON text; the Python package
// decodes them.
std::string event_json(const StepEvent& e) {
    nlohmann::json j;
    j["kind"] = step_event_kind_name(e.kind);
    j["field_id"] = e.field_id ? nlohmann::json(*e.field_id) : nlohmann::json(nullptr);
    j["detail"] = e.detail;
    return j.dump();
}

const FormSchema& form_or_throw(const std::string& form_id) {
    const FormSchema* form = find_form(builtin_catalog(), form_id);
    if (!form) throw Error(ErrorCode::UnknownForm, "unknown form '" + form_id + "'");
    return *form;
}

/// One live episode on a built-in form.
class PyEnv {
public:
    PyEnv(const std::string& form_id, const std::string& record_json, const std::string& theme_id, int width,
          int height, bool ruler_on, int step_cap) {
        const FormSchema& form = form_or_throw(form_id);
        SessionConfig config;
        config.theme = builtin_theme(theme_id.empty() ? form.theme_id : theme_id);
        config.viewport = {width, height};
        config.ruler_on = ruler_on;
        config.step_cap = step_cap;
        state_ = create_session(std::make_shared<const FormSchema>(form),
                                std::make_shared<const GoldRecord>(parse_record(record_json)), config);
    }

    /// Applies every action in DSL text; returns the events as JSON.
    std::string step_text(const std::string& text) {
        nlohmann::json events = nlohmann::json::array();
        for (const Action& a : parse_actions(text).actions) {
            if (state_.submitted) break;
            history_.push_back({a, current_layout(state_)});
            StepOutcome out = step(state_, a);
            state_ = std::move(out.state);
            events_.push_back(out.event);
            events.push_back(nlohmann::json::parse(event_json(out.event)));
        }
        raw_ += text;
        raw_ += '\n';
        return events.dump();
    }

    std::string oracle_text() const { return format_actions(oracle_agent(state_).actions); }

    py::bytes screenshot_png() const {
        const auto png = encode_png(observe(state_).screenshot);
        return py::bytes(reinterpret_cast<const char*>(png.data()), png.size());
    }

    std::map<std::string, std::string> values() const { return extract_form_values(state_); }
    std::string report_json() const { return report_to_json(score_episode(state_, history_, raw_, events_)); }
    bool submitted() const { return state_.submitted; }
    int page() const { return state_.current_page; }
    int step_count() const { return state_.step_count; }

private:
    EnvState state_;
    std::vector<ActionRecord> history_;
    std::vector<StepEvent> events_;
    std::string raw_;
};

std::vector<std::string> catalog_documents() {
    std::vector<std::string> out;
    for (const auto& form : builtin_catalog()) out.push_back(serialize_form_schema(form));
    return out;
}

std::string dataset_jsonl(int per_form_count, std::uint64_t seed) {
    return dataset_to_jsonl(build_dataset(builtin_catalog(), per_form_count, seed));
}

std::string oracle_episode(const std::string& form_id, const std::string& record_json, const std::string& theme_id) {
    const FormSchema& form = form_or_throw(form_id);
    SessionConfig config;
    config.theme = builtin_theme(theme_id.empty() ? form.theme_id : theme_id);
    const EnvState session = create_session(std::make_shared<const FormSchema>(form),
                                            std::make_shared<const GoldRecord>(parse_record(record_json)), config);
    OracleClient oracle;
    return report_to_json(run_episode(oracle, session).report);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Native core of the formgym form-filling environment.";
    py::register_exception<Error>(m, "FormgymError", PyExc_RuntimeError);

    m.def("catalog_documents", &catalog_documents, "Serialized form schemas of the built-in catalog.");
    m.def("dataset_jsonl", &dataset_jsonl, py::arg("per_form_count"), py::arg("seed"),
          "Templated dataset as JSON lines.");
    m.def("bleu", [](const std::string& c, const std::string& r, int n) { return bleu(c, r, n); },
          py::arg("candidate"), py::arg("reference"), py::arg("max_n") = 4);
    m.def("format_actions_of", [](const std::string& text) { return format_actions(parse_actions(text).actions); },
          py::arg("text"), "Normalized DSL of the parseable actions in text.");
    m.def("oracle_episode", &oracle_episode, py::arg("form_id"), py::arg("record_json"), py::arg("theme_id") = "",
          "Runs the gold-knowing agent and returns the score report as JSON.");

    py::class_<PyEnv>(m, "Env")
        .def(py::init<const std::string&, const std::string&, const std::string&, int, int, bool, int>(),
             py::arg("form_id"), py::arg("record_json"), py::arg("theme_id") = "",
             py::arg("width") = kDefaultViewport.width, py::arg("height") = kDefaultViewport.height,
             py::arg("ruler_on") = false, py::arg("step_cap") = kDefaultStepCap)
        .def("step_text", &PyEnv::step_text, py::arg("text"))
        .def("oracle_text", &PyEnv::oracle_text)
        .def("screenshot_png", &PyEnv::screenshot_png)
        .def("values", &PyEnv::values)
        .def("report_json", &PyEnv::report_json)
        .def_property_readonly("submitted", &PyEnv::submitted)
        .def_property_readonly("page", &PyEnv::page)
        .def_property_readonly("step_count", &PyEnv::step_count);
}
