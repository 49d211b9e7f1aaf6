#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace esos {

/// All randomized procedures draw from mt19937_64 through these helpers
/// rather than std::uniform_int_distribution, whose output is
/// implementation-defined; this keeps certificates reproducible.
using Rng = std::mt19937_64;

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Independent stream for trial #index of a seeded run.
inline Rng derived_rng(uint64_t seed, uint64_t index) {
    return Rng(splitmix64(seed ^ splitmix64(index + 1)));
}

/// Uniform integer in [0, n), unbiased via rejection.
inline uint64_t rng_below(Rng& rng, uint64_t n) {
    if (n == 0) return 0;
    uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

inline int rng_range(Rng& rng, int lo, int hi) {  // inclusive bounds
    return lo + (int)rng_below(rng, (uint64_t)(hi - lo + 1));
}

inline bool rng_chance(Rng& rng, long long num, long long den) {
    return rng_below(rng, (uint64_t)den) < (uint64_t)num;
}

/// Fisher-Yates prefix: k distinct values sampled from [0, n), order randomized.
inline std::vector<int> rng_sample(Rng& rng, int n, int k) {
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    for (int i = 0; i < k; ++i) {
        int j = i + (int)rng_below(rng, (uint64_t)(n - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    return pool;
}

inline void rng_shuffle(Rng& rng, std::vector<int>& v) {
    for (int i = (int)v.size() - 1; i > 0; --i) {
        int j = (int)rng_below(rng, (uint64_t)(i + 1));
        std::swap(v[i], v[j]);
    }
}

}  // namespace esos
