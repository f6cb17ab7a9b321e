#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace fairsignal {

// Stable mixing for deriving independent sub-stream seeds from one master seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    return splitmix64(master ^ splitmix64(stream + 0x51CA5EEDULL));
}

// Uniform in [0,1) from the top 53 bits. Bypasses std distributions so the
// draw sequence does not depend on the standard library implementation.
inline double uniform01(std::mt19937_64& g) {
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

// Inclusive range; spans here are tiny (2 actions), modulo bias is negligible.
inline int uniform_int(std::mt19937_64& g, int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(g() % span);
}

// Knuth's product method, exact for the small rates used here (<= a few veh/s).
inline int poisson_sample(std::mt19937_64& g, double rate) {
    if (rate <= 0.0) return 0;
    const double limit = std::exp(-rate);
    int k = 0;
    double p = 1.0;
    do {
        ++k;
        p *= uniform01(g);
    } while (p > limit);
    return k - 1;
}

}  // namespace fairsignal
