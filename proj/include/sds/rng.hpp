#pragma once

#include <cstdint>
#include <random>
#include <string>

namespace sds {

/// Seeded 64-bit generator with hand-rolled draw functions so that identical
/// (algorithm, seed) pairs reproduce identical sequences on every platform.
/// std::uniform_*_distribution is deliberately avoided; its output is
/// implementation-defined.
class RngStream {
  public:
    explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    static constexpr const char* algorithm() { return "mt19937_64"; }
    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0,1) with 53 bits of precision.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n) by rejection, no modulo bias.
    std::uint64_t uniform_index(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % n;
    }

    bool bernoulli(double p) { return uniform() < p; }

  private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

/// Stable splitmix64-style mixer for deriving per-cell seeds from a master
/// seed and a cell index.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master + 0x9E3779B97F4A7C15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace sds
