#pragma once

#include <cstdint>
#include <limits>

namespace okdens {

/// SplitMix64 (Steele, Lea, Flood). Used to expand 64-bit seeds.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t operator()() noexcept
    {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

private:
    std::uint64_t state_;
};

/// First SplitMix64 output for the given state; a cheap 64-bit mixer.
inline std::uint64_t splitmix64_mix(std::uint64_t x) noexcept { return SplitMix64(x)(); }

/// xoshiro256** 1.0 (Blackman, Vigna), state filled from SplitMix64(seed).
class Xoshiro256StarStar {
public:
    using result_type = std::uint64_t;

    explicit Xoshiro256StarStar(std::uint64_t seed) noexcept
    {
        SplitMix64 sm(seed);
        for (auto& word : s_) word = sm();
    }

    std::uint64_t operator()() noexcept
    {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Unbiased draw from [0, range) by rejection; range > 0.
    std::uint64_t below(std::uint64_t range) noexcept
    {
        const std::uint64_t threshold = (0 - range) % range;  // 2^64 mod range
        for (;;) {
            std::uint64_t x = (*this)();
            if (x >= threshold) return x % range;
        }
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) noexcept { return (x << k) | (x >> (64 - k)); }

    std::uint64_t s_[4];
};

}  // namespace okdens
