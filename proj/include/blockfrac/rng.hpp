#pragma once

#include <cstdint>

namespace blockfrac {

// Counter-based SplitMix64. draw(seed, i) equals the i-th output of the
// sequential SplitMix64 stream started at `seed`, so draws can be produced
// in any order (or in parallel) with bit-exact replay.
namespace rng {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

inline std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline std::uint64_t draw(std::uint64_t seed, std::uint64_t counter) {
    return mix(seed + (counter + 1) * kGamma);
}

// Derives stream s of a base seed; used for per-trial seeds.
inline std::uint64_t derive(std::uint64_t base, std::uint64_t stream) { return draw(base, stream); }

}  // namespace rng

// Sequential convenience wrapper around the counter-based draws.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t next() { return rng::draw(seed_, counter_++); }

    // Uniform over [0, bound) by 128-bit multiply; bound >= 1.
    std::uint64_t next_below(std::uint64_t bound) {
        return std::uint64_t((unsigned __int128)next() * bound >> 64);
    }

    bool next_bernoulli_num(std::uint64_t num, std::uint64_t den) {  // probability num/den
        return next_below(den) < num;
    }

    std::uint64_t counter() const { return counter_; }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

}  // namespace blockfrac
