// Timing comparison of the serial reference implementations against the
// OpenMP kernels: Monte Carlo replication, batched second-chaos sampling,
// and the CDF probe. Values printed are wall seconds and speedup.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>

#include "hermite/chaos.hpp"
#include "hermite/mc.hpp"
#include "hermite/paths.hpp"
#include "hermite/stats.hpp"

using namespace hermite;

namespace {

double time_it(const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(const char* name, double serial, double parallel) {
    std::printf("%-36s serial %7.3f s   omp %7.3f s   speedup %.2fx\n", name, serial, parallel,
                serial / parallel);
}

}  // namespace

int main() {
    int threads = omp_get_max_threads();
    std::printf("threads: %d\n", threads);

    {
        auto replicate = [](RngStream& s) {
            auto p = sample_hermite_path(s, HermiteSpec(2, 0.7), 1.0, 64, {.lattice_n = 4096});
            return p.values.back() * p.values.back();
        };
        double ts = time_it([&] { run_replications_serial(1, 2000, replicate); });
        double tp = time_it([&] { run_replications(1, 2000, replicate, threads); });
        report("hermite-path replicates (2000)", ts, tp);
    }

    {
        auto pair = rosenblatt_kernel_pair(0.7, 0.5, 1.0, 1.0, 0.5, 128);
        double ts = time_it([&] { sample_second_chaos_indexed(3, pair.f, 50000, 1); });
        double tp = time_it([&] { sample_second_chaos_indexed(3, pair.f, 50000, threads); });
        report("second-chaos draws (50k, m=128)", ts, tp);
    }

    {
        double ts = time_it(
            [&] { rosenblatt_cdf_probe(5, 0.7, {-0.6256, 1.3552}, 10000, {.lattice_n = 2048}, 1); });
        double tp = time_it([&] {
            rosenblatt_cdf_probe(5, 0.7, {-0.6256, 1.3552}, 10000, {.lattice_n = 2048}, threads);
        });
        report("rosenblatt CDF probe (10k)", ts, tp);
    }

    return 0;
}
