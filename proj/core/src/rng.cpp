#include "snse/rng.hpp"

#include <cmath>

namespace snse::rng {

double normal_from_bits(std::uint64_t u1, std::uint64_t u2) {
    const double a = to_unit(u1);
    const double b = to_unit(u2);
    return std::sqrt(-2.0 * std::log(a)) * std::cos(2.0 * 3.14159265358979323846 * b);
}

double CounterRng::normal(std::uint64_t a, std::uint64_t b) const {
    return normal_from_bits(mix(key, a, b, 0), mix(key, a, b, 1));
}

double Stream::normal() {
    const std::uint64_t u1 = next_bits();
    const std::uint64_t u2 = next_bits();
    return normal_from_bits(u1, u2);
}

void Fingerprint::absorb_bytes(const void* data, std::size_t size) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < size; ++i) {
        h ^= bytes[i];
        h *= 0x100000001b3ULL;
    }
}

}  // namespace snse::rng
