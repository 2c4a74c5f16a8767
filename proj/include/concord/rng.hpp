#pragma once

#include "concord/normal.hpp"

#include <cstdint>
#include <random>

namespace concord {

// All randomness in the library flows through explicit 64-bit seeds.
// Sub-streams (bootstrap replicates, simulation cells, ...) derive their own
// seed by mixing the parent seed with stream tags, so results do not depend
// on scheduling or worker count.

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) {
    return splitmix64(seed ^ splitmix64(tag + 0x632be59bd9b4e019ULL));
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag1, std::uint64_t tag2) {
    return derive_seed(derive_seed(seed, tag1), tag2);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform draw in the open interval (0,1).
    double uniform() {
        // 53-bit mantissa, shifted off zero so the normal quantile stays finite
        const std::uint64_t bits = engine_() >> 11;
        double u = (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
        return u;
    }

    /// Standard normal via the inverse-CDF transform; keeps the stream
    /// identical across standard libraries.
    double normal() { return norm_quantile(uniform()); }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) {
        return engine_() % n;
    }

private:
    std::mt19937_64 engine_;
};

} // namespace concord
