#pragma once

#include <cstdint>
#include <string>

#include "snse/field.hpp"

namespace snse {

class WienerPath;

/// Binary container: magic "SNSF", 4-byte little-endian header length, JSON
/// header, then little-endian f64 payload.
///
/// kind "field": header {kind, d, N, L, components, time, solenoidal};
/// payload holds (re, im) pairs in row-major k order, the d-vector of each
/// mode stored contiguously.
///
/// kind "wiener": header {kind, dt, steps, modes, seed}; payload holds the
/// increments in step-major, mode-minor order.
void write_field_snsf(const std::string& path, const SpectralField& f, double time);

struct LoadedField {
    SpectralField field;
    double time = 0.0;
};

LoadedField read_field_snsf(const std::string& path);

void write_wiener_snsf(const std::string& path, const WienerPath& w);

struct LoadedWiener {
    double dt = 0.0;
    int steps = 0;
    int modes = 0;
    std::uint64_t seed = 0;
    std::vector<double> increments;  ///< step-major
};

LoadedWiener read_wiener_snsf(const std::string& path);

}  // namespace snse
