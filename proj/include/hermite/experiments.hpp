#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace hermite {

/// Named verification experiments. Each experiment runs a seeded Monte Carlo
/// (or deterministic) check and returns a structured report of sub-checks;
/// the report content is a pure function of (name, seed, params).
struct ExperimentContext {
    std::uint64_t seed = 42;
    std::size_t reps = 0;  // 0 = experiment default
    int threads = 0;       // 0 = all available
    std::map<std::string, double> params;
};

struct ExperimentResult {
    nlohmann::json report;
    bool pass = false;
};

std::vector<std::string> experiment_names();
bool has_experiment(const std::string& name);
ExperimentResult run_experiment(const std::string& name, const ExperimentContext& ctx);

}  // namespace hermite
