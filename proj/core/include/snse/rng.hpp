#pragma once

#include <cstdint>

namespace snse::rng {

/// SplitMix64 step; the usual constants.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    return splitmix64(splitmix64(a) ^ (0x9e3779b97f4a7c15ULL + b));
}

inline std::uint64_t mix(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return mix(mix(a, b), c);
}

inline std::uint64_t mix(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) {
    return mix(mix(a, b, c), d);
}

/// Map 64 random bits to (0,1); never returns 0 or 1.
inline double to_unit(std::uint64_t bits) {
    return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

/// Standard normal from two independent 64-bit words (Box-Muller).  Fully
/// deterministic and platform independent, unlike std::normal_distribution.
double normal_from_bits(std::uint64_t u1, std::uint64_t u2);

/// Counter-based Gaussian stream: normal(a, b) depends only on (key, a, b).
struct CounterRng {
    std::uint64_t key = 0;
    double normal(std::uint64_t a, std::uint64_t b) const;
    double uniform(std::uint64_t a, std::uint64_t b) const {
        return to_unit(mix(key, a, b, 0x75a9u));
    }
};

/// Sequential Gaussian/uniform stream seeded once.
class Stream {
  public:
    explicit Stream(std::uint64_t seed) : state_(splitmix64(seed ^ 0x5851f42d4c957f2dULL)) {}
    std::uint64_t next_bits() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return splitmix64(state_);
    }
    double uniform() { return to_unit(next_bits()); }
    double normal();

  private:
    std::uint64_t state_;
};

/// FNV-1a accumulator used to fingerprint consumed noise increments.
struct Fingerprint {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    void absorb_bytes(const void* data, std::size_t size);
    void absorb(double x) { absorb_bytes(&x, sizeof x); }
    void absorb(std::uint64_t x) { absorb_bytes(&x, sizeof x); }
};

}  // namespace snse::rng
