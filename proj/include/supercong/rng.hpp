#pragma once

#include <cstdint>
#include <string_view>

namespace supercong {

// splitmix64: platform-independent, so seeded parameter draws reproduce
// byte-identically everywhere.
struct SplitMix {
    uint64_t state;
    explicit SplitMix(uint64_t s) : state(s) {}

    uint64_t next() {
        uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    long below(long n) {  // uniform in [0, n)
        uint64_t un = static_cast<uint64_t>(n);
        uint64_t bound = UINT64_MAX - UINT64_MAX % un;
        uint64_t x;
        do { x = next(); } while (x >= bound);
        return static_cast<long>(x % un);
    }

    long range(long lo, long hi) { return lo + below(hi - lo + 1); }
};

inline uint64_t fnv1a(std::string_view s) {
    uint64_t h = 1469598103934665603ull;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace supercong
