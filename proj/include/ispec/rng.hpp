#pragma once

#include <cstdint>
#include <random>

namespace ispec {

/// Deterministic uniform sampler. Maps raw mt19937_64 output to doubles
/// explicitly instead of going through std::uniform_real_distribution, whose
/// stream is not pinned by the standard; identical seeds therefore give
/// identical samples on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1).
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform in [-1, 1).
    double symmetric_unit() { return 2.0 * unit() - 1.0; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

private:
    std::mt19937_64 engine_;
};

/// splitmix64 mix, used to derive independent stream seeds from a base seed
/// plus indices (benchmark cells, trials).
inline std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0,
                                 std::uint64_t c = 0) {
    return mix_seed(mix_seed(mix_seed(base ^ 0x5bf03635u) ^ a) ^ mix_seed(b ^ (c << 20)));
}

} // namespace ispec
