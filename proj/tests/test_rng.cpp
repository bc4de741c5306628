#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hermite/rng.hpp"

using namespace hermite;

TEST_CASE("same (seed, stream) is bit-identical") {
    auto a = derive_stream(42, 0);
    auto b = derive_stream(42, 0);
    for (int i = 0; i < 10; ++i) CHECK(a.gauss() == b.gauss());
}

TEST_CASE("distinct streams differ") {
    auto a = derive_stream(42, 0);
    auto b = derive_stream(42, 1);
    bool any_diff = false;
    for (int i = 0; i < 10; ++i)
        if (a.gauss() != b.gauss()) any_diff = true;
    CHECK(any_diff);
}

TEST_CASE("stream is reproducible after re-derivation") {
    std::vector<double> first;
    {
        auto s = derive_stream(42, 5);
        first = s.gauss_vector(64);
    }
    auto s = derive_stream(42, 5);
    auto second = s.gauss_vector(64);
    CHECK(first == second);
}

TEST_CASE("draws look standard normal") {
    auto s = derive_stream(7, 0);
    const int n = 200000;
    double sum = 0.0, sum2 = 0.0, sum4 = 0.0;
    for (int i = 0; i < n; ++i) {
        double x = s.gauss();
        sum += x;
        sum2 += x * x;
        sum4 += x * x * x * x;
    }
    double mean = sum / n;
    double var = sum2 / n - mean * mean;
    double kurt = sum4 / n / (var * var);
    CHECK(std::abs(mean) < 0.01);
    CHECK(std::abs(var - 1.0) < 0.02);
    CHECK(std::abs(kurt - 3.0) < 0.1);
}

TEST_CASE("uniform in [0,1)") {
    auto s = derive_stream(3, 2);
    for (int i = 0; i < 1000; ++i) {
        double u = s.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
}
