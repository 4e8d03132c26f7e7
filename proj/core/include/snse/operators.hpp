#pragma once

#include <limits>

#include "snse/field.hpp"

namespace snse {

/// Orthogonal projection onto divergence-free fields: per mode k != 0 the
/// coefficient is multiplied by I - k k^T / |k|^2; the mean mode is zeroed.
/// Idempotent and self-adjoint; output is tagged solenoidal.
SpectralField leray_project(const SpectralField& f);

/// Bessel potential (I - Laplace)^{s/2}: multiplier (1 + |kappa|^2)^{s/2}.
SpectralField bessel_potential(const SpectralField& f, double s);

/// Stokes semigroup e^{-t nu A}: multiplier exp(-nu |kappa|^2 t).
/// Throws std::invalid_argument for t < 0 or nu <= 0.
SpectralField stokes_semigroup(const SpectralField& f, double t, double nu);

/// Yosida smoothing n(nI + A)^{-1}: multiplier n / (n + |kappa|^2).
/// n may be any positive value (infinity means no smoothing); n <= 0 throws.
SpectralField yosida_smoother(const SpectralField& f, double n);

/// Multiplier of the Yosida smoother at squared wavenumber ksq.
inline double yosida_multiplier(double n, double ksq) {
    if (!(n < std::numeric_limits<double>::infinity())) return 1.0;
    return n / (n + ksq);
}

/// Dealiased Leray-projected advection term Pi((u . grad) v).  Both inputs
/// are masked with the grid dealias rule before the pseudospectral product
/// and the result is masked again, projected and mean-freed, so the retained
/// coefficients equal the exact convolution for band-limited inputs.
/// Throws std::invalid_argument on a grid mismatch.
SpectralField advection(const SpectralField& u, const SpectralField& v);

/// Zero every coefficient outside the grid dealias band (in place).
void apply_dealias_mask(SpectralField& f);

}  // namespace snse
