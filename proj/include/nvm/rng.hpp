#pragma once

#include <cstdint>

namespace nvm {

// Counter-based uniform stream: draw i is a bit-mix of (key, i), so a stream
// is fully determined by its (seed, stream) key and the number of draws
// consumed.  Replicas get decorrelated streams by using their replica index
// as the stream id, which makes parallel runs bit-reproducible regardless of
// worker count.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
        : key_(mix(mix(seed + 0x9e3779b97f4a7c15ull) ^
                   mix(stream + 0xbf58476d1ce4e5b9ull))) {}

    std::uint64_t next_u64() { return mix(key_ + (++counter_) * 0x9e3779b97f4a7c15ull); }

    /// Uniform in [0, 1), 53-bit resolution.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in (0, 1); safe as the argument of std::log.
    double next_unit_open() {
        return (static_cast<double>(next_u64() >> 12) + 0.5) * 0x1.0p-52;
    }

    /// Uniform integer in [0, n).
    int next_below(int n) { return static_cast<int>(next_unit() * n); }

private:
    // splitmix64 finalizer
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

} // namespace nvm
