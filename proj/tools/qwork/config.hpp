#pragma once

// Experiment configuration: a JSON document plus `--key value` overrides.
//
//   {
//     "experiment": "gravity-tpm",
//     "parameters": { "m": 1, "g": 1, "p0": 2, "n_trials": 1000, "seed": 7 },
//     "output": { "path": "out.csv", "format": "csv" }
//   }

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace qwork::cli {

enum class Experiment { gravity_work, gravity_tpm, elastic, displacement, spin, two_time, uncertainty, conservation };
enum class Format { csv, json };

const std::vector<Experiment>& all_experiments();
std::string to_string(Experiment e);
std::optional<Experiment> parse_experiment(std::string_view name);
std::string to_string(Format f);
std::optional<Format> parse_format(std::string_view name);

/// Bad or missing configuration entry; `key` names the offender.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string key, const std::string& message)
        : std::runtime_error(key + ": " + message), key_(std::move(key)) {}
    const std::string& key() const { return key_; }

private:
    std::string key_;
};

/// Thrown when the output file cannot be written.
class OutputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OutputSpec {
    std::string path;
    Format format = Format::csv;
};

class ExperimentConfig {
public:
    Experiment experiment = Experiment::gravity_work;
    /// Sorted by key so echoes are stable.
    std::map<std::string, nlohmann::json> parameters;
    OutputSpec output;

    static ExperimentConfig from_json(const nlohmann::json& doc);
    static ExperimentConfig from_file(const std::string& path);

    /// Applies a textual override; numbers and booleans are parsed, anything
    /// else is kept as a string.
    void set_override(const std::string& key, const std::string& value);

    /// Typed accessors. `fallback` is returned and echoed when the key is
    /// absent. Keys seen through any accessor are recorded as consumed.
    double number(const std::string& key, double fallback) const;
    double positive(const std::string& key, double fallback) const;
    double non_negative(const std::string& key, double fallback) const;
    std::int64_t integer(const std::string& key, std::int64_t fallback) const;
    std::uint64_t seed(const std::string& key, std::uint64_t fallback) const;
    std::string text(const std::string& key, const std::string& fallback) const;

    /// Every parameter read by the experiment, including defaults, in key
    /// order.
    std::map<std::string, nlohmann::json> echo() const { return echo_; }
    /// Keys supplied by the user that no accessor read.
    std::vector<std::string> unused_keys() const;

private:
    const nlohmann::json* find(const std::string& key) const;
    mutable std::map<std::string, nlohmann::json> echo_;
};

}  // namespace qwork::cli
