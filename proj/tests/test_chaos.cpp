#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hermite/chaos.hpp"
#include "hermite/errors.hpp"
#include "hermite/stats.hpp"

using namespace hermite;

TEST_CASE("kernel_from_function basics") {
    auto ones = kernel_from_function([](double, double) { return 1.0; }, 0.0, 1.0, 4);
    CHECK(ones.delta == doctest::Approx(0.25));
    CHECK(ones.a.minCoeff() == doctest::Approx(1.0));
    CHECK(ones.a.maxCoeff() == doctest::Approx(1.0));

    auto rank1 = kernel_from_function([](double u, double v) { return u * v; }, 0.0, 1.0, 8);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(rank1.a);
    CHECK(svd.singularValues()[1] < 1e-12);

    CHECK_THROWS_AS(kernel_from_function(
                        [](double u, double v) { return 1.0 / (u - v); }, 0.0, 1.0, 4),
                    QuadratureError);
}

TEST_CASE("asymmetric input is symmetrized") {
    auto k = kernel_from_function([](double u, double v) { return u + 2.0 * v; }, 0.0, 1.0, 6);
    CHECK((k.a - k.a.transpose()).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("trace cumulants: isometry, scalar kernel, scaling, permutation") {
    auto k = kernel_from_function(
        [](double u, double v) { return std::cos(u) * std::cos(v) + u * v; }, 0.0, 1.0, 32);
    // p = 2 equals twice the discretized squared L2 norm
    double frob = (k.a * k.delta).squaredNorm();
    CHECK(cumulant_trace(k, 2) == doctest::Approx(2.0 * frob).epsilon(1e-12));

    // 1x1 kernel: cumulants of c (xi^2 - 1)
    KernelMatrix scalar;
    scalar.grid = {0.5};
    scalar.delta = 1.0;
    scalar.a = Eigen::MatrixXd::Constant(1, 1, 0.5);
    for (int p = 2; p <= 4; ++p) {
        double expect = std::pow(2.0, p - 1.0) * std::tgamma(p) * std::pow(0.5, p);
        CHECK(cumulant_trace(scalar, p) == doctest::Approx(expect).epsilon(1e-12));
    }

    // scaling: kappa_p(c a) = c^p kappa_p(a)
    KernelMatrix k3 = k;
    k3.a *= 3.0;
    for (int p = 2; p <= 5; ++p)
        CHECK(cumulant_trace(k3, p) ==
              doctest::Approx(std::pow(3.0, p) * cumulant_trace(k, p)).epsilon(1e-12));

    // permutation invariance
    KernelMatrix kp = k;
    Eigen::PermutationMatrix<Eigen::Dynamic> perm(k.a.rows());
    perm.setIdentity();
    std::swap(perm.indices()[0], perm.indices()[17]);
    std::swap(perm.indices()[3], perm.indices()[11]);
    kp.a = perm * k.a * perm.transpose();
    for (int p = 2; p <= 4; ++p)
        CHECK(cumulant_trace(kp, p) == doctest::Approx(cumulant_trace(k, p)).epsilon(1e-12));

    KernelMatrix zero = k;
    zero.a.setZero();
    for (int p = 2; p <= 8; ++p) CHECK(cumulant_trace(zero, p) == doctest::Approx(0.0));
}

TEST_CASE("second-chaos sampler matches the trace cumulants") {
    // fixed random symmetric 8x8 kernel
    auto s0 = derive_stream(101, 0);
    KernelMatrix k;
    int m = 8;
    k.delta = 1.0 / m;
    k.grid.resize(m);
    for (int i = 0; i < m; ++i) k.grid[i] = (i + 0.5) * k.delta;
    Eigen::MatrixXd g(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) g(i, j) = s0.gauss();
    k.a = 0.5 * (g + g.transpose());

    auto draws = sample_second_chaos_indexed(103, k, 200000);
    auto est = empirical_cumulants(draws, 4);
    CHECK(std::abs(est.kappa[0]) < 3.0 * est.se[0]);  // centered
    for (int p = 2; p <= 4; ++p)
        CHECK(std::abs(est.kappa[p - 1] - cumulant_trace(k, p)) < 5.0 * est.se[p - 1]);
}

TEST_CASE("diagonal kernel reduces to independent chi-squares") {
    KernelMatrix k;
    int m = 4;
    k.delta = 0.5;
    k.grid = {0.25, 0.75, 1.25, 1.75};
    k.a = Eigen::MatrixXd::Zero(m, m);
    k.a.diagonal() << 0.3, -0.2, 0.5, 0.1;
    // kappa_3 = 8 sum (a_ii delta)^3
    double expect = 0.0;
    for (int i = 0; i < m; ++i) expect += 8.0 * std::pow(k.a(i, i) * k.delta, 3.0);
    CHECK(cumulant_trace(k, 3) == doctest::Approx(expect).epsilon(1e-12));
    auto draws = sample_second_chaos_indexed(107, k, 400000);
    auto est = empirical_cumulants(draws, 3);
    CHECK(std::abs(est.kappa[2] - expect) < 5.0 * est.se[2]);
}

TEST_CASE("rosenblatt pair: normalization, shared cumulants, zero case") {
    auto pair = rosenblatt_kernel_pair(0.7, 0.5, 1.0, 1.0, 0.0, 256);
    CHECK(cumulant_trace(pair.f, 2) == doctest::Approx(1.0).epsilon(0.05));

    auto mix = rosenblatt_kernel_pair(0.7, 0.5, 1.0, 1.0, 0.5, 256);
    for (int p = 2; p <= 4; ++p) {
        double kf = cumulant_trace(mix.f, p);
        double kg = cumulant_trace(mix.g, p);
        CHECK(std::abs(kf - kg) < 0.05 * std::abs(kf));
    }

    auto zero = rosenblatt_kernel_pair(0.7, 0.5, 1.0, 0.0, 0.0, 64);
    for (int p = 2; p <= 4; ++p) {
        CHECK(cumulant_trace(zero.f, p) == doctest::Approx(0.0));
        CHECK(cumulant_trace(zero.g, p) == doctest::Approx(0.0));
    }
}

TEST_CASE("refinement consistency of trace cumulants on a smooth kernel") {
    auto f = [](double u, double v) { return std::exp(-(u + v)) + 0.2 * u * v; };
    auto k1 = kernel_from_function(f, 0.0, 1.0, 48);
    auto k2 = kernel_from_function(f, 0.0, 1.0, 96);
    for (int p = 2; p <= 4; ++p) {
        double a = cumulant_trace(k1, p), b = cumulant_trace(k2, p);
        CHECK(std::abs(a - b) < 0.02 * std::abs(b));
    }
}
