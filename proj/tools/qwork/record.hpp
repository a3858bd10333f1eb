#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "config.hpp"

namespace qwork::cli {

/// Named scalars that belong together, e.g. (mean, width) of one protocol.
struct ScalarGroup {
    std::string name;
    std::vector<std::pair<std::string, double>> values;

    friend bool operator==(const ScalarGroup&, const ScalarGroup&) = default;
};

/// Two-column table such as a sampled density (value, density).
struct Table {
    std::string name;
    std::pair<std::string, std::string> columns;
    std::vector<std::pair<double, double>> rows;

    friend bool operator==(const Table&, const Table&) = default;
};

struct SampleList {
    std::string name;
    std::vector<double> values;

    friend bool operator==(const SampleList&, const SampleList&) = default;
};

struct ResultRecord {
    std::string experiment;
    std::string version;
    std::optional<std::uint64_t> seed;
    std::map<std::string, nlohmann::json> parameters;
    std::vector<ScalarGroup> scalars;
    std::vector<Table> tables;
    std::vector<SampleList> samples;

    ScalarGroup& group(const std::string& name);
    /// Looks up a scalar; throws std::out_of_range when missing.
    double scalar(const std::string& group, const std::string& name) const;

    friend bool operator==(const ResultRecord&, const ResultRecord&) = default;
};

/// Fixed 17-significant-digit rendering; scientific for |x| < 1e-4 or
/// |x| >= 1e6.
std::string format_number(double x);

std::string to_csv(const ResultRecord& record);
nlohmann::ordered_json to_json(const ResultRecord& record);
std::string to_json_text(const ResultRecord& record);
ResultRecord record_from_json(const nlohmann::json& doc);

/// Writes the record in `format`; throws OutputError on I/O failure.
void emit(const ResultRecord& record, Format format, const std::string& path);

}  // namespace qwork::cli
