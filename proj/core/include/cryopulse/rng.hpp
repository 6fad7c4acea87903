#pragma once

#include <cstdint>

namespace cryopulse {

// Counter-based generator built from the splitmix64 finalizer. Every draw is
// a pure function of (seed, stream, counter), so sweep points can consume
// disjoint streams in any schedule and still reproduce bit-identical output
// on every platform.
class CounterRng {
  public:
    constexpr CounterRng(std::uint64_t seed, std::uint64_t stream)
        : base_(mix(mix(seed) ^ stream)) {}

    constexpr std::uint64_t bits(std::uint64_t counter) const { return mix(base_ ^ counter); }

    // Uniform in [0, 1), 53-bit resolution.
    constexpr double u01(std::uint64_t counter) const {
        return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
    }

    // Uniform in [-1, 1].
    constexpr double symmetric(std::uint64_t counter) const { return 2.0 * u01(counter) - 1.0; }

  private:
    static constexpr std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t base_;
};

} // namespace cryopulse
