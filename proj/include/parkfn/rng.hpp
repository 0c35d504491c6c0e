#pragma once

#include <cstdint>
#include <limits>

namespace parkfn {

// Counter-based 64-bit generator: a splitmix64 finalizer applied to an
// incrementing counter.  The starting counter is derived by hashing the
// (seed, stream) pair, so substreams for worker threads come from the same
// seed without coordination and the output sequence of a stream never
// depends on how many threads are running.
//
// A single stream must not be shared between threads; hand each thread its
// own (seed, stream-id) instance instead.
class RandomStream {
  public:
    using result_type = std::uint64_t;

    explicit RandomStream(std::uint64_t seed, std::uint64_t stream = 0)
        : counter_(mix(mix(seed) + 0x9e3779b97f4a7c15ull * (stream + 1))) {}

    std::uint64_t next_u64() {
        counter_ += 0x9e3779b97f4a7c15ull;
        return mix(counter_);
    }

    // Uniform on the open interval (0,1): 53 random bits shifted off the
    // lattice endpoints.  Safe to feed through log/log1p without hitting
    // log(0).
    double next_unit() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    // Uniform on {0, ..., n-1}, unbiased (Lemire multiply-shift with
    // rejection).
    std::uint64_t next_index(std::uint64_t n) {
        std::uint64_t x = next_u64();
        __uint128_t m = static_cast<__uint128_t>(x) * n;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < n) {
            const std::uint64_t threshold = (-n) % n;
            while (lo < threshold) {
                x = next_u64();
                m = static_cast<__uint128_t>(x) * n;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    // UniformRandomBitGenerator interface for <algorithm> and <random>.
    std::uint64_t operator()() { return next_u64(); }
    static constexpr std::uint64_t min() { return 0; }
    static constexpr std::uint64_t max() {
        return std::numeric_limits<std::uint64_t>::max();
    }

  private:
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t counter_;
};

}  // namespace parkfn
