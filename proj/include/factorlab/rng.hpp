#pragma once

#include <cstdint>

namespace factorlab {

/// splitmix64: deterministic across platforms (unlike the standard
/// distributions), trivially splittable via derive_seed, good enough for
/// instance sampling. Reports record the generator name and seed.
inline constexpr const char* kGeneratorName = "splitmix64";

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in [lo, hi], unbiased by rejection.
    int uniform_int(int lo, int hi) {
        std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
        std::uint64_t limit = ~0ull - ~0ull % range;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return lo + static_cast<int>(x % range);
    }

    bool chance(double p) { return (next() >> 11) * 0x1.0p-53 < p; }

private:
    std::uint64_t state_;
};

/// Independent stream seed for a (seed, stream) pair; lets concurrent
/// trials draw identical values no matter how they are scheduled.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    Rng r(seed ^ (0xD1B54A32D192ED03ull * (stream + 1)));
    return r.next();
}

} // namespace factorlab
