#pragma once

#include <map>
#include <string>
#include <vector>

#include "config.hpp"
#include "record.hpp"

namespace qwork::cli {

/// Runs one experiment. Throws ConfigError for bad parameters and lets
/// library ValidationError/NumericalError propagate.
ResultRecord run_experiment(const ExperimentConfig& config);

/// Library operations each experiment calls, for documentation and the
/// integration test that enumerates them.
const std::map<Experiment, std::vector<std::string>>& dispatch_targets();

}  // namespace qwork::cli
