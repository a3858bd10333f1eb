// qwork <experiment> --config <path> [--key value ...] --out <path> --format {csv|json}

#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include <qwork/error.hpp>
#include <qwork/version.hpp>

#include "config.hpp"
#include "experiments.hpp"
#include "record.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kConfig = 2;
constexpr int kNumerical = 3;
constexpr int kIo = 4;

struct Extras {
    std::string experiment;
    std::vector<std::pair<std::string, std::string>> overrides;
};

// Splits unrecognized arguments into the experiment name and --key value
// overrides.
Extras split_extras(const std::vector<std::string>& extras) {
    Extras out;
    for (std::size_t i = 0; i < extras.size(); ++i) {
        const std::string& tok = extras[i];
        if (tok.rfind("--", 0) != 0) {
            if (!out.experiment.empty()) {
                throw qwork::cli::ConfigError(tok, "unexpected argument; overrides take the form --key value");
            }
            out.experiment = tok;
            continue;
        }
        if (tok.size() < 3) throw qwork::cli::ConfigError(tok, "empty override key");
        std::string key = tok.substr(2);
        std::string value;
        if (const auto eq = key.find('='); eq != std::string::npos) {
            value = key.substr(eq + 1);
            key = key.substr(0, eq);
        } else {
            if (i + 1 >= extras.size()) throw qwork::cli::ConfigError(key, "override is missing its value");
            value = extras[++i];
        }
        out.overrides.emplace_back(key, value);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-time work observables and two-point-measurement statistics"};
    app.set_version_flag("--version", std::string(qwork::version));
    app.allow_extras();
    app.usage("Usage: qwork <experiment> [--config FILE] [--key value ...] --out FILE [--format csv|json]");

    std::string config_path;
    std::string out_path;
    std::string format_name;
    bool list_targets = false;
    app.footer("Experiments: gravity-work, gravity-tpm, elastic, displacement, spin, two-time, uncertainty,\n"
               "conservation. Any other --key value pair overrides an experiment parameter.");
    app.add_option("--config", config_path, "JSON configuration file");
    app.add_option("--out", out_path, "Output file");
    app.add_option("--format", format_name, "csv or json");
    app.add_flag("--list-targets", list_targets, "Print the library operations each experiment calls");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "qwork: " << e.what() << '\n';
        return kConfig;
    }

    if (list_targets) {
        for (const auto& [exp, ops] : qwork::cli::dispatch_targets()) {
            std::cout << qwork::cli::to_string(exp) << ':';
            for (const auto& op : ops) std::cout << ' ' << op;
            std::cout << '\n';
        }
        return kOk;
    }

    qwork::cli::ExperimentConfig cfg;
    try {
        const Extras extras = split_extras(app.remaining());
        const std::string& experiment_name = extras.experiment;
        if (!config_path.empty()) cfg = qwork::cli::ExperimentConfig::from_file(config_path);
        if (!experiment_name.empty()) {
            const auto e = qwork::cli::parse_experiment(experiment_name);
            if (!e) throw qwork::cli::ConfigError("experiment", "unknown experiment '" + experiment_name + "'");
            cfg.experiment = *e;
        } else if (config_path.empty()) {
            throw qwork::cli::ConfigError("experiment", "missing experiment name");
        }
        for (const auto& [key, value] : extras.overrides) cfg.set_override(key, value);
        if (!out_path.empty()) cfg.output.path = out_path;
        if (!format_name.empty()) {
            const auto f = qwork::cli::parse_format(format_name);
            if (!f) throw qwork::cli::ConfigError("format", "must be csv or json");
            cfg.output.format = *f;
        }
        if (cfg.output.path.empty()) throw qwork::cli::ConfigError("out", "no output path given");
    } catch (const qwork::cli::ConfigError& e) {
        std::cerr << "qwork: invalid configuration: " << e.what() << '\n';
        return kConfig;
    }

    qwork::cli::ResultRecord record;
    try {
        record = qwork::cli::run_experiment(cfg);
    } catch (const qwork::cli::ConfigError& e) {
        std::cerr << "qwork: invalid configuration: " << e.what() << '\n';
        return kConfig;
    } catch (const qwork::ValidationError& e) {
        std::cerr << "qwork: invalid configuration: " << e.what() << '\n';
        return kConfig;
    } catch (const std::exception& e) {
        std::cerr << "qwork: numerical failure: " << e.what() << '\n';
        return kNumerical;
    }

    try {
        qwork::cli::emit(record, cfg.output.format, cfg.output.path);
    } catch (const qwork::cli::OutputError& e) {
        std::cerr << "qwork: " << e.what() << '\n';
        return kIo;
    }
    return kOk;
}
