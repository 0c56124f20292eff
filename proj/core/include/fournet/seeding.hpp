#pragma once

#include <cstdint>
#include <random>

namespace fournet {

// SplitMix64 output function (Steele, Lea, Flood 2014).
[[nodiscard]] std::uint64_t mix64(std::uint64_t x) noexcept;

// Stable per-trial seed: trial `index` of stream `stream` is reproducible in
// isolation, independent of how trials are scheduled across threads.
[[nodiscard]] std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream, std::uint64_t index) noexcept;

// Uniform doubles in [0, 1) with 53 random bits from a 64-bit Mersenne
// Twister. Bit-identical across platforms (std distributions are not).
class UniformSource {
public:
    explicit UniformSource(std::uint64_t seed) : engine_(seed) {}

    double next() noexcept { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // True with probability `p` (p >= 1 is always true, p <= 0 never).
    bool bernoulli(double p) noexcept { return next() < p; }

private:
    std::mt19937_64 engine_;
};

} // namespace fournet
