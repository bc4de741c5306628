#include "hermite/mc.hpp"

#include <omp.h>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hermite {

namespace {

void fill_replicate(std::uint64_t master_seed, std::size_t r, const Replicate& exp, double& value,
                    std::string& error) {
    try {
        RngStream stream = derive_stream(master_seed, r);
        value = exp(stream);
    } catch (const std::exception& e) {
        value = std::numeric_limits<double>::quiet_NaN();
        error = e.what();
    }
}

McReport summarize(std::uint64_t master_seed, std::vector<double> values,
                   std::vector<std::string> errors) {
    McReport rep;
    rep.master_seed = master_seed;
    rep.n_replicates = values.size();
    rep.per_replicate = std::move(values);
    for (std::size_t r = 0; r < rep.per_replicate.size(); ++r)
        if (!errors[r].empty()) rep.failures.emplace_back(r, errors[r]);
    rep.partial = !rep.failures.empty();

    double sum = 0.0;
    std::size_t n_ok = 0;
    for (double v : rep.per_replicate)
        if (std::isfinite(v)) {
            sum += v;
            ++n_ok;
        }
    if (n_ok == 0) throw std::runtime_error("run_replications: every replicate failed");
    rep.mean = sum / static_cast<double>(n_ok);

    if (n_ok >= 2) {
        double ss = 0.0;
        for (double v : rep.per_replicate)
            if (std::isfinite(v)) {
                double d = v - rep.mean;
                ss += d * d;
            }
        rep.variance = ss / static_cast<double>(n_ok - 1);
        rep.variance_defined = true;
        rep.std_error = std::sqrt(rep.variance / static_cast<double>(n_ok));
        rep.ci95 = {rep.mean - 1.96 * rep.std_error, rep.mean + 1.96 * rep.std_error};
    } else {
        rep.variance = std::numeric_limits<double>::quiet_NaN();
        rep.std_error = std::numeric_limits<double>::quiet_NaN();
        rep.ci95 = {rep.mean, rep.mean};
    }
    return rep;
}

}  // namespace

McReport run_replications_serial(std::uint64_t master_seed, std::size_t n_reps,
                                 const Replicate& exp) {
    if (n_reps < 1) throw std::domain_error("run_replications: n_reps must be >= 1");
    std::vector<double> values(n_reps);
    std::vector<std::string> errors(n_reps);
    for (std::size_t r = 0; r < n_reps; ++r)
        fill_replicate(master_seed, r, exp, values[r], errors[r]);
    return summarize(master_seed, std::move(values), std::move(errors));
}

McReport run_replications(std::uint64_t master_seed, std::size_t n_reps, const Replicate& exp,
                          int threads) {
    if (n_reps < 1) throw std::domain_error("run_replications: n_reps must be >= 1");
    std::vector<double> values(n_reps);
    std::vector<std::string> errors(n_reps);
    int nthreads = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
    for (long r = 0; r < static_cast<long>(n_reps); ++r)
        fill_replicate(master_seed, static_cast<std::size_t>(r), exp, values[r], errors[r]);
    return summarize(master_seed, std::move(values), std::move(errors));
}

}  // namespace hermite
