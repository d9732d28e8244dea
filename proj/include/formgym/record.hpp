#pragma once

#include <map>
#include <string>
#include <string_view>
#include <optional>

namespace formgym {

using ValueMap = std::map<std::string, std::string>;

enum class Provenance { Templated, LlmGenerated, Ingested };

std::string_view provenance_name(Provenance provenance);
std::optional<Provenance> parse_provenance(std::string_view name);

/// One benchmark sample: the context document handed to the agent and the
/// gold value for every scored field.
struct GoldRecord {
    std::string sample_id;
    std::string form_id;
    std::string context_document;
    ValueMap gold;
    Provenance provenance = Provenance::Templated;

    bool operator==(const GoldRecord&) const = default;
};

}  // namespace formgym
