#pragma once

#include <cstdint>
#include <random>

namespace disq {

/// Seeded random stream. Outcomes depend only on the seed, never on the
/// standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [0, 1) with 53 random bits.
    double uniform();
    // Uniform integer in [lo, hi].
    std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi);
    int bit() { return static_cast<int>(engine_() >> 63U); }

    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

// Independent stream for shot `index` of a run seeded with `seed`.
Rng derive_stream(std::uint64_t seed, std::uint64_t index);

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace disq
