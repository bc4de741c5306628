#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace hermite {

/// Deterministic, replicate-addressable random stream.
///
/// A stream is identified by (master_seed, stream_index). The same pair
/// always yields the same sequence, independent of which worker draws it
/// or in which order replicates run. Distinct indices give streams whose
/// seeds are decorrelated through a SplitMix64 hash.
class RngStream {
  public:
    RngStream(std::uint64_t master_seed, std::uint64_t stream_index);

    std::uint64_t master_seed() const { return master_seed_; }
    std::uint64_t stream_index() const { return stream_index_; }

    /// One N(0,1) draw. Box-Muller, consuming exactly two uniforms per pair
    /// so the draw sequence is fully determined by the engine state.
    double gauss();

    /// Uniform on [0,1).
    double uniform();

    std::vector<double> gauss_vector(std::size_t n);

  private:
    std::uint64_t master_seed_;
    std::uint64_t stream_index_;
    std::mt19937_64 engine_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

inline RngStream derive_stream(std::uint64_t master_seed, std::uint64_t stream_index) {
    return RngStream(master_seed, stream_index);
}

}  // namespace hermite
