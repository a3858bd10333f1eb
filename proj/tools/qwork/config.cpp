#include "config.hpp"

#include <cmath>
#include <fstream>
#include <limits>

namespace qwork::cli {

namespace {

const std::vector<std::pair<Experiment, std::string>>& experiment_names() {
    static const std::vector<std::pair<Experiment, std::string>> names{
        {Experiment::gravity_work, "gravity-work"}, {Experiment::gravity_tpm, "gravity-tpm"},
        {Experiment::elastic, "elastic"},           {Experiment::displacement, "displacement"},
        {Experiment::spin, "spin"},                 {Experiment::two_time, "two-time"},
        {Experiment::uncertainty, "uncertainty"},   {Experiment::conservation, "conservation"},
    };
    return names;
}

}  // namespace

const std::vector<Experiment>& all_experiments() {
    static const std::vector<Experiment> all = [] {
        std::vector<Experiment> v;
        for (const auto& [e, name] : experiment_names()) v.push_back(e);
        return v;
    }();
    return all;
}

std::string to_string(Experiment e) {
    for (const auto& [ex, name] : experiment_names()) {
        if (ex == e) return name;
    }
    return "unknown";
}

std::optional<Experiment> parse_experiment(std::string_view name) {
    for (const auto& [e, n] : experiment_names()) {
        if (n == name) return e;
    }
    return std::nullopt;
}

std::string to_string(Format f) { return f == Format::csv ? "csv" : "json"; }

std::optional<Format> parse_format(std::string_view name) {
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    return std::nullopt;
}

ExperimentConfig ExperimentConfig::from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) throw ConfigError("config", "top level must be a JSON object");
    ExperimentConfig cfg;
    if (doc.contains("experiment")) {
        if (!doc["experiment"].is_string()) throw ConfigError("experiment", "must be a string");
        const auto e = parse_experiment(doc["experiment"].get<std::string>());
        if (!e) throw ConfigError("experiment", "unknown experiment '" + doc["experiment"].get<std::string>() + "'");
        cfg.experiment = *e;
    }
    if (doc.contains("parameters")) {
        const auto& params = doc["parameters"];
        if (!params.is_object()) throw ConfigError("parameters", "must be a JSON object");
        for (const auto& [key, value] : params.items()) {
            if (!value.is_primitive() || value.is_null()) {
                throw ConfigError(key, "parameter values must be numbers, booleans or strings");
            }
            cfg.parameters[key] = value;
        }
    }
    if (doc.contains("output")) {
        const auto& out = doc["output"];
        if (!out.is_object()) throw ConfigError("output", "must be a JSON object");
        if (out.contains("path")) {
            if (!out["path"].is_string()) throw ConfigError("output.path", "must be a string");
            cfg.output.path = out["path"].get<std::string>();
        }
        if (out.contains("format")) {
            const auto f = out["format"].is_string() ? parse_format(out["format"].get<std::string>()) : std::nullopt;
            if (!f) throw ConfigError("output.format", "must be \"csv\" or \"json\"");
            cfg.output.format = *f;
        }
    }
    return cfg;
}

ExperimentConfig ExperimentConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config", "cannot open '" + path + "'");
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError("config", std::string("malformed JSON: ") + e.what());
    }
    return from_json(doc);
}

void ExperimentConfig::set_override(const std::string& key, const std::string& value) {
    if (key.empty()) throw ConfigError("--", "empty override key");
    nlohmann::json parsed = nlohmann::json::parse(value, nullptr, false);
    if (parsed.is_discarded() || !parsed.is_primitive() || parsed.is_null()) parsed = value;
    parameters[key] = parsed;
}

const nlohmann::json* ExperimentConfig::find(const std::string& key) const {
    const auto it = parameters.find(key);
    return it == parameters.end() ? nullptr : &it->second;
}

double ExperimentConfig::number(const std::string& key, double fallback) const {
    const nlohmann::json* v = find(key);
    if (!v) {
        echo_[key] = fallback;
        return fallback;
    }
    if (!v->is_number()) throw ConfigError(key, "must be a number");
    const double x = v->get<double>();
    if (!std::isfinite(x)) throw ConfigError(key, "must be finite");
    echo_[key] = *v;
    return x;
}

double ExperimentConfig::positive(const std::string& key, double fallback) const {
    const double x = number(key, fallback);
    if (!(x > 0.0)) throw ConfigError(key, "must be positive");
    return x;
}

double ExperimentConfig::non_negative(const std::string& key, double fallback) const {
    const double x = number(key, fallback);
    if (x < 0.0) throw ConfigError(key, "must be non-negative");
    return x;
}

std::int64_t ExperimentConfig::integer(const std::string& key, std::int64_t fallback) const {
    const nlohmann::json* v = find(key);
    if (!v) {
        echo_[key] = fallback;
        return fallback;
    }
    if (v->is_number_integer()) {
        echo_[key] = *v;
        return v->get<std::int64_t>();
    }
    if (v->is_number_float()) {
        const double x = v->get<double>();
        if (std::floor(x) == x && std::abs(x) < 9.0e15) {
            echo_[key] = *v;
            return static_cast<std::int64_t>(x);
        }
    }
    throw ConfigError(key, "must be an integer");
}

std::uint64_t ExperimentConfig::seed(const std::string& key, std::uint64_t fallback) const {
    const nlohmann::json* v = find(key);
    if (!v) {
        echo_[key] = fallback;
        return fallback;
    }
    if (v->is_number_unsigned()) {
        echo_[key] = *v;
        return v->get<std::uint64_t>();
    }
    if (v->is_number_integer() && v->get<std::int64_t>() >= 0) {
        echo_[key] = *v;
        return static_cast<std::uint64_t>(v->get<std::int64_t>());
    }
    throw ConfigError(key, "must be a non-negative integer");
}

std::string ExperimentConfig::text(const std::string& key, const std::string& fallback) const {
    const nlohmann::json* v = find(key);
    if (!v) {
        echo_[key] = fallback;
        return fallback;
    }
    if (!v->is_string()) throw ConfigError(key, "must be a string");
    echo_[key] = *v;
    return v->get<std::string>();
}

std::vector<std::string> ExperimentConfig::unused_keys() const {
    std::vector<std::string> out;
    for (const auto& [key, value] : parameters) {
        if (!echo_.contains(key)) out.push_back(key);
    }
    return out;
}

}  // namespace qwork::cli
