#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "formgym/action.hpp"
#include "formgym/bitmap.hpp"
#include "formgym/layout.hpp"
#include "formgym/record.hpp"
#include "formgym/schema.hpp"
#include "formgym/theme.hpp"

namespace formgym {

inline constexpr int kDefaultStepCap = 500;

struct SessionConfig {
    Theme theme;
    Viewport viewport = kDefaultViewport;
    bool ruler_on = false;
    std::uint64_t seed = 0;
    int step_cap = kDefaultStepCap;
};

struct EnvState {
    std::string session_id;
    std::shared_ptr<const FormSchema> schema;
    std::shared_ptr<const GoldRecord> sample;
    SessionConfig config;
    int current_page = 0;
    FormState form;
    bool submitted = false;
    bool step_cap_reached = false;
    int step_count = 0;
};

enum class StepEventKind {
    Focused,
    TextEntered,
    OptionSelected,
    Toggled,
    DateChosen,
    PageTurned,
    FileRecorded,
    Submitted,
    NoEffect,
};

std::string_view step_event_kind_name(StepEventKind kind);
std::optional<StepEventKind> parse_step_event_kind(std::string_view name);

struct StepEvent {
    StepEventKind kind = StepEventKind::NoEffect;
    std::optional<std::string> field_id;
    std::string detail;

    bool operator==(const StepEvent&) const = default;
};

/// Detail prefix on the NoEffect event emitted for a Type with nothing focused.
inline constexpr std::string_view kNoFocusForType = "error: NoFocusForType";

struct StepOutcome {
    EnvState state;
    StepEvent event;
};

struct Observation {
    Bitmap screenshot;
    int page_index = 0;
    int page_count = 1;
    Viewport viewport;
    int step_count = 0;
};

EnvState create_session(std::shared_ptr<const FormSchema> schema,
                        std::shared_ptr<const GoldRecord> sample, SessionConfig config,
                        std::string session_id = "local");

/// Applies one action. Throws SessionTerminated once submitted.
StepOutcome step(const EnvState& state, const Action& action);

LayoutTree current_layout(const EnvState& state);
Observation observe(const EnvState& state);

/// Canonical value per set field; unset fields are absent.
ValueMap extract_form_values(const EnvState& state);

/// Month the date picker shows when opened on `field_id`: the current value's
/// month, else the gold date's month, else 2024-01.
CivilDate calendar_reference_month(const EnvState& state, std::string_view field_id);

}  // namespace formgym
