#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "hermite/rng.hpp"

namespace hermite {

/// Replicate-indexed Monte Carlo summary.
struct McReport {
    std::size_t n_replicates = 0;
    std::vector<double> per_replicate;  // NaN where a replicate failed
    double mean = 0.0;
    double variance = 0.0;  // sample variance (n-1); NaN when undefined
    double std_error = 0.0;
    std::pair<double, double> ci95{0.0, 0.0};
    std::uint64_t master_seed = 0;
    bool variance_defined = false;
    bool partial = false;  // some replicates failed
    std::vector<std::pair<std::size_t, std::string>> failures;
};

using Replicate = std::function<double(RngStream&)>;

/// Replicate r runs on derive_stream(master_seed, r); aggregation is a
/// serial pass over the index-keyed results, so the report is identical
/// for any worker count or execution order.
McReport run_replications(std::uint64_t master_seed, std::size_t n_reps, const Replicate& exp,
                          int threads = 0);

/// Serial reference implementation (identical output by construction).
McReport run_replications_serial(std::uint64_t master_seed, std::size_t n_reps,
                                 const Replicate& exp);

}  // namespace hermite
