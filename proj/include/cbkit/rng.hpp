#pragma once

#include <cstdint>

namespace cbkit {

/// Deterministic 64-bit generator (splitmix64). Used instead of <random>
/// engines plus distributions because distribution output is not pinned by
/// the standard, and seeds here must reproduce bit-identically everywhere.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform-ish draw in [0, bound); modulo bias is irrelevant at the
    /// bounds used here (bound << 2^64).
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    /// Integer in [lo, hi] inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t state_;
};

/// Derive an independent stream from a base seed; attempt/retry loops use
/// stream indices so redraws are reproducible.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    SplitMix64 g(base ^ (0xa0761d6478bd642full + stream * 0xe7037ed1a0b428dbull));
    return g.next();
}

} // namespace cbkit
