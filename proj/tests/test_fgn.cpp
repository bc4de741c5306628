#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "hermite/fgn.hpp"
#include "hermite/mc.hpp"

using namespace hermite;

TEST_CASE("rho_fgn anchor values") {
    CHECK(rho_fgn(0.7, 0) == doctest::Approx(1.0));
    CHECK(rho_fgn(0.5, 3) == doctest::Approx(0.0));
    CHECK(rho_fgn(0.75, 1) == doctest::Approx(0.5 * (std::pow(2.0, 1.5) - 2.0)).epsilon(1e-12));
    CHECK_THROWS_AS(rho_fgn(1.2, 1), std::domain_error);
}

TEST_CASE("white noise case: near-zero lag-1 autocorrelation") {
    auto s = derive_stream(1, 0);
    auto x = sample_fgn(s, 0.5, 1024);
    double c0 = 0.0, c1 = 0.0;
    for (std::size_t i = 0; i < x.n; ++i) c0 += x.values[i] * x.values[i];
    for (std::size_t i = 0; i + 1 < x.n; ++i) c1 += x.values[i] * x.values[i + 1];
    CHECK(std::abs(c1 / c0) < 4.0 / std::sqrt(1024.0));
}

TEST_CASE("determinism") {
    auto s1 = derive_stream(1, 0);
    auto s2 = derive_stream(1, 0);
    auto a = sample_fgn(s1, 0.7, 8);
    auto b = sample_fgn(s2, 0.7, 8);
    CHECK(a.values == b.values);
}

TEST_CASE("empirical autocovariance matches rho_fgn at lags 0..5") {
    const double h = 0.8;
    const std::size_t n = 4096;
    const std::size_t reps = 200;
    for (long lag = 0; lag <= 5; ++lag) {
        auto rep = run_replications(11, reps, [&](RngStream& s) {
            auto x = sample_fgn(s, h, n);
            double acc = 0.0;
            for (std::size_t i = 0; i + lag < n; ++i) acc += x.values[i] * x.values[i + lag];
            return acc / static_cast<double>(n - lag);
        });
        double target = rho_fgn(h, lag);
        CHECK(std::abs(rep.mean - target) < 3.0 * rep.std_error);
    }
}

TEST_CASE("marginals are standard normal (KS across replicates)") {
    // pooled values within one path are long-range correlated; instead pool a
    // fixed coordinate across independent replicates and KS-test against Phi
    const std::size_t n = 256, reps = 400;
    auto phi = [](double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); };
    for (std::size_t coord : {std::size_t{0}, n - 1}) {
        std::vector<double> pooled(reps);
        for (std::size_t r = 0; r < reps; ++r) {
            auto s = derive_stream(5, r);
            pooled[r] = sample_fgn(s, 0.7, n).values[coord];
        }
        std::sort(pooled.begin(), pooled.end());
        double d = 0.0;
        for (std::size_t i = 0; i < reps; ++i) {
            double f = phi(pooled[i]);
            d = std::max(d, std::max(f - i / static_cast<double>(reps),
                                     (i + 1) / static_cast<double>(reps) - f));
        }
        // alpha = 0.01 with Bonferroni over the two coordinates
        double crit = 1.73 / std::sqrt(static_cast<double>(reps));
        CHECK(d < crit);
    }
}

TEST_CASE("sheet separability: covariance factorizes") {
    const double h1 = 0.7, h2 = 0.9;
    const std::size_t n = 64, m = 64;
    Eigen::MatrixXd l1 = fgn_cholesky(h1, n), l2 = fgn_cholesky(h2, m);
    const std::size_t reps = 500;
    auto run_lag = [&](int di, int dj) {
        auto rep = run_replications(17, reps, [&](RngStream& s) {
            Eigen::MatrixXd x = sample_fgn_sheet_with_factors(s, l1, l2);
            double acc = 0.0;
            int cnt = 0;
            for (std::size_t i = 0; i + di < n; i += 4)
                for (std::size_t j = 0; j + dj < m; j += 4) {
                    acc += x(i, j) * x(i + di, j + dj);
                    ++cnt;
                }
            return acc / cnt;
        });
        return rep;
    };
    auto r10 = run_lag(1, 0);
    CHECK(std::abs(r10.mean - rho_fgn(h1, 1)) < 3.0 * r10.std_error);
    auto r01 = run_lag(0, 1);
    CHECK(std::abs(r01.mean - rho_fgn(h2, 1)) < 3.0 * r01.std_error);
    auto r11 = run_lag(1, 1);
    CHECK(std::abs(r11.mean - rho_fgn(h1, 1) * rho_fgn(h2, 1)) < 3.0 * r11.std_error);
}

TEST_CASE("independent case: separable sheet with H = 0.5") {
    Eigen::MatrixXd l = fgn_cholesky(0.5, 32);
    auto rep = run_replications(23, 400, [&](RngStream& s) {
        Eigen::MatrixXd x = sample_fgn_sheet_with_factors(s, l, l);
        double acc = 0.0;
        int cnt = 0;
        for (std::size_t i = 0; i + 1 < 32; ++i)
            for (std::size_t j = 0; j + 1 < 32; ++j) {
                acc += x(i, j) * x(i + 1, j + 1);
                ++cnt;
            }
        return acc / cnt;
    });
    CHECK(std::abs(rep.mean) < 3.0 * rep.std_error + 1e-12);
}

TEST_CASE("degenerate single row reduces to 1-d fGn") {
    auto s = derive_stream(2, 0);
    Eigen::MatrixXd x = sample_fgn_sheet(s, 0.7, 0.9, 1, 16);
    CHECK(x.rows() == 1);
    CHECK(x.cols() == 16);
}
