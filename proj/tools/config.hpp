#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "alleedyn/integrate.hpp"
#include "alleedyn/model.hpp"

namespace alleedyn::cli {

/// Raised on malformed run configuration (unknown keys, missing fields,
/// out-of-range values). Message carries the offending field.
struct ConfigError : Error {
    using Error::Error;
};

struct RunConfig {
    ModelParams params;                 // always nondimensionalized
    bool from_raw = false;              // true when "raw_params" was given
    std::optional<State> init;
    IntegrationOpts integration;
};

/// Strict parse: exactly one of "params"/"raw_params"; unknown keys are
/// errors everywhere.
RunConfig parse_config(const nlohmann::json& j);
RunConfig load_config(const std::string& path);

nlohmann::json params_to_json(const ModelParams& p);

}  // namespace alleedyn::cli
