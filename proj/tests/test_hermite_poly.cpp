#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hermite/errors.hpp"
#include "hermite/quadrature.hpp"
#include "hermite/hermite_poly.hpp"
#include "hermite/quadrature.hpp"

using namespace hermite;

TEST_CASE("low-degree values") {
    CHECK(hermite_poly(2, 0.0) == doctest::Approx(-1.0));
    CHECK(hermite_poly(3, 2.0) == doctest::Approx(2.0));
    for (double x : {-1.0, 0.0, 3.5}) CHECK(hermite_poly(1, x) == doctest::Approx(x));
    CHECK(hermite_poly(0, 1.7) == doctest::Approx(1.0));
    CHECK(hermite_poly(4, 1.0) == doctest::Approx(1.0 - 6.0 + 3.0));  // x^4-6x^2+3
}

TEST_CASE("orthogonality under the normal weight") {
    std::vector<double> x, w;
    gauss_hermite(48, x, w);
    const double s = std::sqrt(2.0), isp = 1.0 / std::sqrt(M_PI);
    for (int j = 0; j <= 8; ++j)
        for (int k = 0; k <= 8; ++k) {
            double acc = 0.0;
            for (int i = 0; i < 48; ++i)
                acc += w[i] * hermite_poly(j, s * x[i]) * hermite_poly(k, s * x[i]);
            acc *= isp;
            double expect = (j == k) ? std::tgamma(j + 1.0) : 0.0;
            CHECK(acc == doctest::Approx(expect).epsilon(1e-8).scale(std::tgamma(j + 1.0)));
        }
}

TEST_CASE("coefficients of exact polynomials") {
    auto c = hermite_coefficients([](double x) { return x * x - 1.0; }, 4);
    CHECK(std::abs(c[0]) < 1e-10);
    CHECK(c[1] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(std::abs(c[2]) < 1e-10);

    auto c3 = hermite_coefficients([](double x) { return x * x * x; }, 4);
    CHECK(c3[0] == doctest::Approx(3.0).epsilon(1e-10));  // x^3 = H_3 + 3 H_1
    CHECK(c3[2] == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("coefficients of |x| - sqrt(2/pi)") {
    double c0 = std::sqrt(2.0 / M_PI);
    auto g = [c0](double x) { return std::abs(x) - c0; };
    auto c = hermite_coefficients(g, 4, 64);
    auto c_hi = hermite_coefficients(g, 4, 128);
    CHECK(std::abs(c[0]) < 1e-10);  // odd coefficient vanishes by symmetry

    // oracle: direct quadrature of E[g(N) H_2(N)] / 2! against the normal
    // weight, split at the kink of |x|
    auto integrand = [&](double x) {
        return g(x) * (x * x - 1.0) * std::exp(-0.5 * x * x) / std::sqrt(2.0 * M_PI);
    };
    double oracle =
        0.5 * (integrate_gl(integrand, -14.0, 0.0, 64) + integrate_gl(integrand, 0.0, 14.0, 64));
    CHECK(oracle == doctest::Approx(1.0 / std::sqrt(2.0 * M_PI)).epsilon(1e-10));
    // Gauss-Hermite converges slowly on the non-smooth integrand; the two
    // node counts bracket the oracle
    CHECK(c[1] == doctest::Approx(oracle).epsilon(5e-3));
    CHECK(c_hi[1] == doctest::Approx(oracle).epsilon(3e-3));
}

TEST_CASE("hermite rank") {
    CHECK(hermite_rank([](double x) { return x * x - 1.0; }, 6) == 2);
    CHECK(hermite_rank([](double x) { return x * x * x - 3.0 * x; }, 6) == 3);
    double e = std::exp(-0.5);
    CHECK(hermite_rank([e](double x) { return std::cos(x) - e; }, 6) == 2);
    CHECK_THROWS_AS(hermite_rank([](double) { return 0.0; }, 6), RankError);
}
