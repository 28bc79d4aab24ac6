#pragma once

// Counter-based deterministic random source. Every draw is a pure function
// of (seed, stream, counter), so sampled experiments reproduce exactly for
// a given seed regardless of worker count or evaluation order. Not
// cryptographic; statistical quality is SplitMix64-grade, which is plenty
// for Monte Carlo coefficient draws.

#include <cstdint>

namespace ffdensity {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace detail

class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    /// 64 uniform bits for (stream, counter); stateless.
    std::uint64_t bits(std::uint64_t stream, std::uint64_t counter) const {
        std::uint64_t h = detail::splitmix64(seed_ ^ 0xD6E8FEB86659FD93ULL);
        h = detail::splitmix64(h ^ stream);
        return detail::splitmix64(h ^ counter);
    }

    /// Uniform value in [0, bound) via rejection; bound >= 1.
    /// Consumes counters counter, counter+1, ... and reports how many in
    /// *used so callers can keep per-stream counters collision-free.
    std::uint32_t below(std::uint32_t bound, std::uint64_t stream, std::uint64_t counter,
                        std::uint64_t* used = nullptr) const {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound + 1) % bound;
        std::uint64_t n = 0;
        for (;; ++n) {
            std::uint64_t v = bits(stream, counter + n);
            if (v <= limit) {
                if (used) *used = n + 1;
                return static_cast<std::uint32_t>(v % bound);
            }
        }
    }

    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
};

}  // namespace ffdensity
