#pragma once

#include <cstdint>
#include <random>

namespace sos {

/// Uniform double in [0, 1) from the top 53 bits of one draw. Used instead
/// of std::uniform_real_distribution so that streams are identical across
/// standard-library implementations.
inline double uniform_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_range(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform_unit(rng);
}

/// Uniform integer in [lo, hi]. Modulo bias is negligible for the small
/// ranges used here.
inline long uniform_int(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<uint64_t>(hi - lo + 1));
}

}  // namespace sos
