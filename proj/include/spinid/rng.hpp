#pragma once

#include <cmath>
#include <cstdint>

namespace spinid {

/// Counter-based generator ("sm64"): every draw is a pure function of
/// (seed, counter), so parallel schedules cannot change results. The mixer is
/// the splitmix64 finalizer.
namespace rng {

inline uint64_t mix(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Derive an independent stream from a seed and a stream index.
inline uint64_t derive(uint64_t seed, uint64_t stream) {
    return mix(seed ^ mix(stream + 0x6a09e667f3bcc909ULL));
}

inline uint64_t value(uint64_t stream, uint64_t counter) {
    return mix(stream + counter * 0xd1342543de82ef95ULL);
}

/// Uniform in (0, 1]; never returns 0 so log() below is safe.
inline double uniform(uint64_t stream, uint64_t counter) {
    return (static_cast<double>(value(stream, counter) >> 11) + 1.0) * 0x1.0p-53;
}

/// Standard normal via Box-Muller on counters (2k, 2k+1).
inline double gaussian(uint64_t stream, uint64_t counter) {
    double u1 = uniform(stream, 2 * counter);
    double u2 = uniform(stream, 2 * counter + 1);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

/// Uniform in [lo, hi).
inline double uniform_range(uint64_t stream, uint64_t counter, double lo, double hi) {
    double u = (static_cast<double>(value(stream, counter) >> 11)) * 0x1.0p-53;
    return lo + u * (hi - lo);
}

constexpr const char* kGeneratorName = "sm64";

}  // namespace rng
}  // namespace spinid
