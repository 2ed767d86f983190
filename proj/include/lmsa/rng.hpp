#pragma once

#include <cstdint>

namespace lmsa {

// Counter-addressable pseudo-random words: the n-th word of a keyed stream is
// a pure function of (key, n), so any position can be regenerated without
// replay. The mixer is the splitmix64 finalizer.
inline std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

// Key for (base_seed, stream); distinct streams decorrelate by avalanche.
inline std::uint64_t stream_key(std::uint64_t base_seed, std::uint64_t stream) {
    return mix64(base_seed ^ mix64(stream * 0x9E3779B97F4A7C15ULL + 0xD1B54A32D192ED03ULL));
}

inline std::uint64_t word_at(std::uint64_t key, std::uint64_t counter) {
    return mix64(key + (counter + 1) * 0x9E3779B97F4A7C15ULL);
}

// Maps a word into (0, 1]: (w >> 11) + 0.5 over 2^53. Never returns 0, so the
// Box-Muller log is safe (the 2^11 largest words round to exactly 1.0, where
// the log is 0).
inline double uniform01(std::uint64_t w) {
    return static_cast<double>((w >> 11) + 0.5) * 0x1.0p-53;
}

// Standard normal draw `index` of the keyed stream. Consumes words 2*index and
// 2*index + 1 (Box-Muller, cosine branch).
double normal_at(std::uint64_t key, std::uint64_t index);

}  // namespace lmsa
