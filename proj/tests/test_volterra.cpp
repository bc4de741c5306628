#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hermite/quadrature.hpp"
#include "hermite/volterra.hpp"

using namespace hermite;

TEST_CASE("derivative integrates back to the kernel") {
    double h = 0.8, s = 0.3, t = 1.0;
    double direct = volterra_KH(h, t, s);
    // integrate d1K(u, s) over u in (s, t]; singular at u = s
    double via = integrate_power_left(
        [&](double u) {
            return volterra_cH(h) * std::pow(s, 0.5 - h) * std::pow(u, h - 0.5);
        },
        s, t, h - 1.5, 64);
    CHECK(direct == doctest::Approx(via).epsilon(1e-10));
}

TEST_CASE("reproducing identity selects the sign-consistent constant") {
    double hp = 0.8, u = 0.7, v = 0.4;
    double lhs = volterra_inner_product(hp, u, v, 96);
    double rhs = hp * (2.0 * hp - 1.0) * std::pow(std::abs(u - v), 2.0 * hp - 2.0);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-3));
}

TEST_CASE("positivity") {
    CHECK(partial1_KH(0.7, 1.0, 0.5) > 0.0);
    CHECK_THROWS_AS(partial1_KH(0.7, 0.5, 0.5), std::domain_error);
    CHECK_THROWS_AS(partial1_KH(0.7, 0.4, 0.5), std::domain_error);
}

TEST_CASE("cell-averaged variance of the finite-interval form converges to 1 from below") {
    // kappa_2 of the cell-averaged kernel with the b_H normalizer tends to
    // Var(R_1) = 1; the gap is the in-cell mass the piecewise-constant
    // projection cannot carry, shrinking like m^{-(2H-1)}
    double h = 0.7, h0 = 0.5 * (h + 1.0);
    double bh = (1.0 / (h + 1.0)) * std::sqrt(2.0 * (2.0 * h - 1.0) / h);
    double prev = 0.0;
    for (int m : {64, 128, 256}) {
        KernelSweep sweep = volterra_kernel_sweep(h0, m, 1.0);
        auto mats = sweep.run({1.0});
        double delta = 1.0 / m;
        double kappa2 = 2.0 * bh * bh * (mats[0] * delta).squaredNorm();
        CHECK(kappa2 < 1.0);
        CHECK(kappa2 > prev);
        prev = kappa2;
    }
    CHECK(prev == doctest::Approx(1.0).epsilon(0.10));
}

TEST_CASE("power-kernel sweep matches the closed-form cell average") {
    // for phi(u,y) = (u-y)_+^{H/2-1}, Phi over a full cell has a closed form;
    // spot-check one positive-side entry against 2-d midpoint refinement
    double h = 0.7;
    int m = 16;
    KernelSweep sweep = power_kernel_sweep(h, m, 0, 1.0);
    auto mats = sweep.run({1.0});
    double delta = 1.0 / m;
    int i = 3, j = 9;
    // reference: average of f(y1,y2) = int_{y2}^{1} (u-y1)^{H/2-1}(u-y2)^{H/2-1} du
    // over the (i,j) cell by refinement
    int r = 48;
    double acc = 0.0;
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) {
            double y1 = (i + (a + 0.5) / r) * delta;
            double y2 = (j + (b + 0.5) / r) * delta;
            double lo = std::max(y1, y2);
            acc += integrate_power_left(
                [&](double u) { return std::pow(u - y1, 0.5 * h - 1.0); }, lo, 1.0,
                0.5 * h - 1.0, 32);
        }
    acc /= r * r;
    CHECK(mats[0](i, j) == doctest::Approx(acc).epsilon(1e-3));
}
