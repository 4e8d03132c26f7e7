#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "snse/rng.hpp"

namespace snse {

struct NoiseSpec;

/// Cylindrical Wiener increments: increment(step, j) ~ N(0, dt), i.i.d.
/// over (step, j) and reproducible from (seed, step, j) alone via a
/// counter-based generator, so truncation level and consumption order do
/// not change any value.  Values are generated on demand; materialize()
/// realises the full (steps x modes) array for export.
class WienerPath {
  public:
    WienerPath() = default;
    WienerPath(double dt, int steps, int modes, std::uint64_t seed);

    double dt() const { return dt_; }
    int steps() const { return steps_; }
    int modes() const { return modes_; }
    std::uint64_t seed() const { return seed_; }

    /// One increment; step in [0, steps), j in [0, modes).
    double increment(int step, int j) const;

    /// All increments of one step.
    void fill_step(int step, std::span<double> out) const;

    /// Dense step-major array, steps*modes entries.
    std::vector<double> materialize() const;

  private:
    double dt_ = 0.0;
    double sqrt_dt_ = 0.0;
    int steps_ = 0;
    int modes_ = 0;
    std::uint64_t seed_ = 0;
    rng::CounterRng gauss_{};
};

/// Factory matching the noise section of the config: dt > 0 required.
WienerPath sample_wiener(const NoiseSpec& spec, double dt, int steps, std::uint64_t seed);

}  // namespace snse
