#include "hermite/rng.hpp"

#include <cmath>

namespace hermite {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t stream_key(std::uint64_t master_seed, std::uint64_t stream_index) {
    std::uint64_t k = splitmix64(master_seed);
    k = splitmix64(k ^ (0x9E3779B97F4A7C15ULL * (stream_index + 1)));
    return k;
}

}  // namespace

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t stream_index)
    : master_seed_(master_seed),
      stream_index_(stream_index),
      engine_(stream_key(master_seed, stream_index)) {}

double RngStream::uniform() {
    // 53-bit mantissa uniform in [0,1)
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RngStream::gauss() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    // u1 in (0,1] so log is finite
    double u1 = 1.0 - uniform();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * M_PI * u2;
    cached_ = r * std::sin(a);
    has_cached_ = true;
    return r * std::cos(a);
}

std::vector<double> RngStream::gauss_vector(std::size_t n) {
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = gauss();
    return out;
}

}  // namespace hermite
