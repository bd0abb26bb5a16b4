#include "config.hpp"

#include <fstream>

namespace alleedyn::cli {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed,
                    const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char* k : allowed)
            if (it.key() == k) { known = true; break; }
        if (!known)
            throw ConfigError("unknown key '" + it.key() + "' in " + where);
    }
}

double get_number(const json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key))
        throw ConfigError("missing field '" + std::string(key) + "' in " + where);
    const auto& v = obj.at(key);
    if (!v.is_number())
        throw ConfigError("field '" + std::string(key) + "' in " + where + " must be a number");
    return v.get<double>();
}

ModelParams parse_params(const json& j) {
    reject_unknown(j, {"m", "theta", "s1", "s2", "alpha1", "alpha2", "beta1", "beta2"},
                   "params");
    return ModelParams{
        get_number(j, "m", "params"),      get_number(j, "theta", "params"),
        get_number(j, "s1", "params"),     get_number(j, "s2", "params"),
        get_number(j, "alpha1", "params"), get_number(j, "alpha2", "params"),
        get_number(j, "beta1", "params"),  get_number(j, "beta2", "params"),
    };
}

RawParams parse_raw_params(const json& j) {
    reject_unknown(j, {"r", "K", "m", "c1", "c2", "theta", "s1", "s2",
                       "alpha1", "alpha2", "beta1", "beta2"}, "raw_params");
    return RawParams{
        get_number(j, "r", "raw_params"),      get_number(j, "K", "raw_params"),
        get_number(j, "m", "raw_params"),      get_number(j, "c1", "raw_params"),
        get_number(j, "c2", "raw_params"),     get_number(j, "theta", "raw_params"),
        get_number(j, "s1", "raw_params"),     get_number(j, "s2", "raw_params"),
        get_number(j, "alpha1", "raw_params"), get_number(j, "alpha2", "raw_params"),
        get_number(j, "beta1", "raw_params"),  get_number(j, "beta2", "raw_params"),
    };
}

State parse_init(const json& j) {
    if (!j.is_array() || j.size() != 3)
        throw ConfigError("'init' must be an array [x, y1, y2]");
    for (const auto& v : j)
        if (!v.is_number()) throw ConfigError("'init' entries must be numbers");
    return State{j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

IntegrationOpts parse_integration(const json& j) {
    reject_unknown(j, {"method", "dt", "rtol", "atol", "dt_min", "dt_max",
                       "t_end", "record_every"}, "integration");
    IntegrationOpts o;
    if (j.contains("method")) {
        const std::string m = j.at("method").get<std::string>();
        if (m == "rk4") o.method = Method::RK4;
        else if (m == "rk45") o.method = Method::RK45;
        else throw ConfigError("integration.method must be 'rk4' or 'rk45'");
    }
    if (j.contains("dt")) o.dt = get_number(j, "dt", "integration");
    if (j.contains("rtol")) o.rtol = get_number(j, "rtol", "integration");
    if (j.contains("atol")) o.atol = get_number(j, "atol", "integration");
    if (j.contains("dt_min")) o.dt_min = get_number(j, "dt_min", "integration");
    if (j.contains("dt_max")) o.dt_max = get_number(j, "dt_max", "integration");
    if (j.contains("t_end")) o.t_end = get_number(j, "t_end", "integration");
    if (j.contains("record_every"))
        o.record_every = static_cast<int>(get_number(j, "record_every", "integration"));
    try {
        validate(o);
    } catch (const Error& e) {
        throw ConfigError(std::string("integration: ") + e.what());
    }
    return o;
}

}  // namespace

RunConfig parse_config(const json& j) {
    if (!j.is_object()) throw ConfigError("config root must be an object");
    reject_unknown(j, {"params", "raw_params", "init", "integration", "outputs"}, "config");

    const bool has_p = j.contains("params");
    const bool has_r = j.contains("raw_params");
    if (has_p == has_r)
        throw ConfigError("exactly one of 'params' / 'raw_params' is required");

    RunConfig cfg;
    try {
        if (has_p) {
            cfg.params = parse_params(j.at("params"));
            validate(cfg.params);
        } else {
            cfg.params = nondimensionalize(parse_raw_params(j.at("raw_params")));
            cfg.from_raw = true;
        }
    } catch (const ConfigError&) {
        throw;
    } catch (const Error& e) {
        throw ConfigError(e.what());
    }

    if (j.contains("init")) cfg.init = parse_init(j.at("init"));
    if (j.contains("integration")) cfg.integration = parse_integration(j.at("integration"));
    if (j.contains("outputs")) {
        reject_unknown(j.at("outputs"), {"formats", "dir"}, "outputs");
    }
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    return parse_config(j);
}

nlohmann::json params_to_json(const ModelParams& p) {
    return {{"m", p.m},           {"theta", p.theta},   {"s1", p.s1},
            {"s2", p.s2},         {"alpha1", p.alpha1}, {"alpha2", p.alpha2},
            {"beta1", p.beta1},   {"beta2", p.beta2}};
}

}  // namespace alleedyn::cli
