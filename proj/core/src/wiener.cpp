#include "snse/wiener.hpp"

#include <cmath>
#include <stdexcept>

#include "snse/noise.hpp"

namespace snse {

WienerPath::WienerPath(double dt, int steps, int modes, std::uint64_t seed)
    : dt_(dt), sqrt_dt_(std::sqrt(dt)), steps_(steps), modes_(modes), seed_(seed) {
    if (!(dt > 0.0)) throw std::invalid_argument("wiener path: dt must be positive");
    if (steps <= 0 || modes <= 0)
        throw std::invalid_argument("wiener path: steps and modes must be positive");
    gauss_.key = rng::mix(seed, 0x57494e52ULL);  // stream tag
}

double WienerPath::increment(int step, int j) const {
    return sqrt_dt_ * gauss_.normal(static_cast<std::uint64_t>(step), static_cast<std::uint64_t>(j));
}

void WienerPath::fill_step(int step, std::span<double> out) const {
    if (out.size() != static_cast<std::size_t>(modes_))
        throw std::invalid_argument("wiener path: increment buffer size mismatch");
    for (int j = 0; j < modes_; ++j) out[j] = increment(step, j);
}

std::vector<double> WienerPath::materialize() const {
    std::vector<double> all(static_cast<std::size_t>(steps_) * modes_);
    for (int s = 0; s < steps_; ++s)
        for (int j = 0; j < modes_; ++j) all[static_cast<std::size_t>(s) * modes_ + j] = increment(s, j);
    return all;
}

WienerPath sample_wiener(const NoiseSpec& spec, double dt, int steps, std::uint64_t seed) {
    if (spec.modes <= 0)
        throw std::invalid_argument(
            "sample_wiener: resolve the basis truncation (spec.modes) before sampling");
    return WienerPath(dt, steps, spec.modes, seed);
}

}  // namespace snse
