#include "record.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qwork::cli {

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string json_scalar_text(const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_float()) return format_number(v.get<double>());
    return v.dump();
}

}  // namespace

ScalarGroup& ResultRecord::group(const std::string& name) {
    for (auto& g : scalars) {
        if (g.name == name) return g;
    }
    scalars.push_back({name, {}});
    return scalars.back();
}

double ResultRecord::scalar(const std::string& group_name, const std::string& name) const {
    for (const auto& g : scalars) {
        if (g.name != group_name) continue;
        for (const auto& [key, value] : g.values) {
            if (key == name) return value;
        }
    }
    throw std::out_of_range("no scalar " + group_name + "." + name);
}

std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (x == 0.0) return "0";
    char buf[64];
    const double a = std::abs(x);
    if (a < 1e-4 || a >= 1e6) {
        std::snprintf(buf, sizeof buf, "%.16e", x);
    } else {
        std::snprintf(buf, sizeof buf, "%.17g", x);
    }
    return buf;
}

std::string to_csv(const ResultRecord& record) {
    std::ostringstream out;
    out << "key,value\n";
    out << "experiment," << csv_field(record.experiment) << '\n';
    out << "version," << csv_field(record.version) << '\n';
    if (record.seed) out << "seed," << *record.seed << '\n';
    for (const auto& [key, value] : record.parameters) {
        out << csv_field("param." + key) << ',' << csv_field(json_scalar_text(value)) << '\n';
    }

    if (!record.scalars.empty()) {
        std::vector<std::string> names;
        for (const auto& g : record.scalars) {
            for (const auto& [key, value] : g.values) {
                if (std::find(names.begin(), names.end(), key) == names.end()) names.push_back(key);
            }
        }
        out << "\ngroup";
        for (const auto& n : names) out << ',' << csv_field(n);
        out << '\n';
        for (const auto& g : record.scalars) {
            out << csv_field(g.name);
            for (const auto& n : names) {
                out << ',';
                for (const auto& [key, value] : g.values) {
                    if (key == n) {
                        out << format_number(value);
                        break;
                    }
                }
            }
            out << '\n';
        }
    }

    for (const auto& t : record.tables) {
        out << "\n# " << t.name << '\n';
        out << csv_field(t.columns.first) << ',' << csv_field(t.columns.second) << '\n';
        for (const auto& [a, b] : t.rows) out << format_number(a) << ',' << format_number(b) << '\n';
    }
    for (const auto& s : record.samples) {
        out << "\n# " << s.name << '\n' << "sample\n";
        for (const double v : s.values) out << format_number(v) << '\n';
    }
    return out.str();
}

nlohmann::ordered_json to_json(const ResultRecord& record) {
    nlohmann::ordered_json doc;
    doc["experiment"] = record.experiment;
    doc["version"] = record.version;
    doc["seed"] = record.seed ? nlohmann::ordered_json(*record.seed) : nlohmann::ordered_json(nullptr);
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [key, value] : record.parameters) params[key] = nlohmann::ordered_json::parse(value.dump());
    doc["parameters"] = params;

    nlohmann::ordered_json scalars = nlohmann::ordered_json::array();
    for (const auto& g : record.scalars) {
        nlohmann::ordered_json values = nlohmann::ordered_json::array();
        for (const auto& [key, value] : g.values) values.push_back({{"name", key}, {"value", value}});
        scalars.push_back({{"group", g.name}, {"values", values}});
    }
    doc["scalars"] = scalars;

    nlohmann::ordered_json tables = nlohmann::ordered_json::array();
    for (const auto& t : record.tables) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const auto& [a, b] : t.rows) rows.push_back({a, b});
        tables.push_back({{"name", t.name}, {"columns", {t.columns.first, t.columns.second}}, {"rows", rows}});
    }
    doc["tables"] = tables;

    nlohmann::ordered_json samples = nlohmann::ordered_json::array();
    for (const auto& s : record.samples) samples.push_back({{"name", s.name}, {"values", s.values}});
    doc["samples"] = samples;
    return doc;
}

std::string to_json_text(const ResultRecord& record) { return to_json(record).dump(2) + "\n"; }

ResultRecord record_from_json(const nlohmann::json& doc) {
    ResultRecord r;
    r.experiment = doc.at("experiment").get<std::string>();
    r.version = doc.at("version").get<std::string>();
    if (!doc.at("seed").is_null()) r.seed = doc.at("seed").get<std::uint64_t>();
    for (const auto& [key, value] : doc.at("parameters").items()) r.parameters[key] = value;
    for (const auto& g : doc.at("scalars")) {
        ScalarGroup group{g.at("group").get<std::string>(), {}};
        for (const auto& v : g.at("values")) {
            group.values.emplace_back(v.at("name").get<std::string>(), v.at("value").get<double>());
        }
        r.scalars.push_back(std::move(group));
    }
    for (const auto& t : doc.at("tables")) {
        Table table{t.at("name").get<std::string>(),
                    {t.at("columns").at(0).get<std::string>(), t.at("columns").at(1).get<std::string>()},
                    {}};
        for (const auto& row : t.at("rows")) table.rows.emplace_back(row.at(0).get<double>(), row.at(1).get<double>());
        r.tables.push_back(std::move(table));
    }
    for (const auto& s : doc.at("samples")) {
        r.samples.push_back({s.at("name").get<std::string>(), s.at("values").get<std::vector<double>>()});
    }
    return r;
}

void emit(const ResultRecord& record, Format format, const std::string& path) {
    const std::string text = format == Format::csv ? to_csv(record) : to_json_text(record);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw OutputError("cannot open '" + path + "' for writing");
    out << text;
    out.flush();
    if (!out) throw OutputError("failed writing '" + path + "'");
}

}  // namespace qwork::cli
