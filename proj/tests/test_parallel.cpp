#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <omp.h>

#include <cmath>

#include "hermite/chaos.hpp"
#include "hermite/mc.hpp"
#include "hermite/paths.hpp"
#include "hermite/stats.hpp"

using namespace hermite;

// The OpenMP kernels must reproduce the serial reference bit for bit at any
// worker count: replicates are keyed by index and every parallel loop writes
// disjoint outputs.

TEST_CASE("harness: serial reference vs 1, 2, 4 workers") {
    auto exp = [](RngStream& s) {
        auto p = sample_hermite_path(s, HermiteSpec(2, 0.7), 1.0, 8, {.lattice_n = 256});
        return p.values.back();
    };
    auto ref = run_replications_serial(77, 40, exp);
    for (int threads : {1, 2, 4}) {
        auto par = run_replications(77, 40, exp, threads);
        CHECK(par.per_replicate == ref.per_replicate);
        CHECK(par.mean == ref.mean);
        CHECK(par.variance == ref.variance);
    }
}

TEST_CASE("indexed second-chaos batch: serial stream order vs workers") {
    KernelMatrix k;
    int m = 16;
    k.delta = 1.0 / m;
    k.grid.resize(m);
    for (int i = 0; i < m; ++i) k.grid[i] = (i + 0.5) * k.delta;
    auto s0 = derive_stream(5, 99);
    Eigen::MatrixXd g(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) g(i, j) = s0.gauss();
    k.a = 0.5 * (g + g.transpose());

    auto one = sample_second_chaos_indexed(13, k, 500, 1);
    auto two = sample_second_chaos_indexed(13, k, 500, 2);
    auto four = sample_second_chaos_indexed(13, k, 500, 4);
    CHECK(one == two);
    CHECK(one == four);

    // the indexed batch draws the same values as per-replicate streams
    for (std::size_t r : {std::size_t{0}, std::size_t{250}, std::size_t{499}}) {
        auto s = derive_stream(13, r);
        Eigen::VectorXd xi(m);
        for (int i = 0; i < m; ++i) xi[i] = s.gauss();
        double expect = k.delta * (xi.dot(k.a * xi) - k.a.trace());
        CHECK(one[r] == doctest::Approx(expect).epsilon(1e-15));
    }
}

TEST_CASE("trace cumulants do not depend on the Eigen thread count") {
    auto pair = rosenblatt_kernel_pair(0.7, 0.5, 1.0, 1.0, 0.5, 64);
    int saved = Eigen::nbThreads();
    Eigen::setNbThreads(1);
    double k4_one = cumulant_trace(pair.f, 4);
    Eigen::setNbThreads(2);
    double k4_two = cumulant_trace(pair.f, 4);
    Eigen::setNbThreads(saved);
    CHECK(k4_one == k4_two);
}
