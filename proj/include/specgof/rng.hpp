#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace specgof {

// Identifies one replica stream: the stream is a pure function of
// (master_seed, replica_index), so results do not depend on which thread
// or in which order a replica is evaluated.
struct SeedSpec {
    std::uint64_t master_seed = 0;
    std::uint64_t replica_index = 0;

    SeedSpec replica(std::uint64_t index) const { return {master_seed, index}; }
};

// SplitMix64 finalizer; used to derive well-separated engine seeds from
// (master_seed, replica_index) counters.
std::uint64_t mix64(std::uint64_t x);

// Deterministic random stream. The engine is std::mt19937_64 (fully
// specified by the standard); the distributions below are hand-rolled so
// the produced sequence is identical across standard library
// implementations.
class RandomStream {
  public:
    explicit RandomStream(SeedSpec seed);

    // 53-bit uniform in [0, 1)
    double uniform();
    // standard normal, Marsaglia polar method
    double gaussian();
    // fair +/-1
    double rademacher();
    // uniform angle in [0, 2*pi)
    double uniform_phase();
    // complex standard normal: real/imag parts i.i.d. N(0, 1/2)
    std::complex<double> complex_gaussian();

    std::uint64_t next_raw() { return engine_(); }

  private:
    std::mt19937_64 engine_;
    double cached_gaussian_ = 0.0;
    bool has_cached_gaussian_ = false;
};

}  // namespace specgof
