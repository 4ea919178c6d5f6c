// rng.hpp - splittable, reproducible random streams.  A master seed is
// expanded through splitmix64 into independent per-path / per-node streams,
// each driving a xoshiro256++ engine; results are identical for any thread
// count.
#pragma once

#include <cmath>
#include <cstdint>

namespace speedsim {

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Stateless mix of a single word.
inline std::uint64_t mix64(std::uint64_t x) {
    std::uint64_t s = x;
    return splitmix64_next(s);
}

// Derives the seed of stream (tag, index) from the master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t tag, std::uint64_t index = 0) {
    std::uint64_t s = master;
    s = mix64(s ^ mix64(tag + 0x9E3779B97F4A7C15ULL));
    s = mix64(s ^ mix64(index + 0xD1B54A32D192ED03ULL));
    return s;
}

// Stream tags used across the library.
namespace stream {
inline constexpr std::uint64_t path = 1;
inline constexpr std::uint64_t node = 2;
inline constexpr std::uint64_t baseline = 3;
inline constexpr std::uint64_t experiment = 4;
inline constexpr std::uint64_t boundary = 5;
}  // namespace stream

class Xoshiro256pp {
  public:
    explicit Xoshiro256pp(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& w : s_) w = splitmix64_next(sm);
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Standard normal via the Box-Muller transform (no cached spare, so the
    // draw sequence is a pure function of the engine state).
    double normal() {
        double u1 = 1.0 - uniform01();  // (0, 1]
        double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    // Exponential with the given mean.
    double exponential(double mean) {
        double u = 1.0 - uniform01();  // (0, 1]
        return -mean * std::log(u);
    }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::uint64_t s_[4];
};

}  // namespace speedsim
