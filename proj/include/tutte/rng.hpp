#pragma once

#include <cstdint>

namespace tutte {

/// SplitMix64: tiny seedable generator with a splittable stream-derivation
/// helper.  Used everywhere randomness is needed so results are reproducible
/// across platforms (no standard-library distributions, which are
/// implementation defined).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n) by rejection; n must be nonzero.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = ~std::uint64_t(0) - ~std::uint64_t(0) % n;
        std::uint64_t r;
        do {
            r = next();
        } while (r >= limit);
        return r % n;
    }

    bool coin() { return (next() & 1u) != 0; }

private:
    std::uint64_t state_;
};

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Derives an independent stream seed from (seed, a, b).  Per-column streams
/// in the hypergraph reduction use (seed, hyperedge index, column index).
inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    std::uint64_t h = mix64(seed + 0x9e3779b97f4a7c15ULL);
    h = mix64(h ^ (a + 0xbf58476d1ce4e5b9ULL));
    h = mix64(h ^ (b + 0x94d049bb133111ebULL));
    return h;
}

}  // namespace tutte
