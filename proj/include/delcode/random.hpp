#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace delcode {

/// One step of the SplitMix64 output function.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Per-trial seed: splitmix64(splitmix64(seed) ^ index). Depends only on
/// (seed, index), so trials can run in any order on any worker.
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) noexcept {
    return splitmix64(splitmix64(seed) ^ index);
}

/// mt19937_64 with distribution code written out here, so draws are
/// identical across standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return v % bound;
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Index drawn with probability proportional to weights[i].
    std::size_t weighted(std::span<const long double> weights) {
        long double total = 0;
        for (auto w : weights) total += w;
        const long double r = static_cast<long double>(unit()) * total;
        long double acc = 0;
        for (std::size_t i = 0; i < weights.size(); ++i) {
            acc += weights[i];
            if (r < acc) return i;
        }
        for (std::size_t i = weights.size(); i-- > 0;)
            if (weights[i] > 0) return i;
        return 0;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace delcode
