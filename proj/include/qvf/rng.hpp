#ifndef QVF_RNG_HPP
#define QVF_RNG_HPP

#include <cstdint>

namespace qvf {

/// splitmix64: tiny deterministic generator with portable output.
/// Used everywhere a seeded stream is required so that results do not
/// depend on the platform's std::uniform_int_distribution.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish draw in [lo, hi]; modulo bias is irrelevant for the
    /// sampling done here and keeps the stream portable.
    long long in_range(long long lo, long long hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long long>(next() % span);
    }

    /// Independent stream for item `index` of a seeded family.
    static SplitMix64 for_index(std::uint64_t seed, std::uint64_t index) {
        SplitMix64 mix(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
        mix.next();
        return mix;
    }
};

} // namespace qvf

#endif
