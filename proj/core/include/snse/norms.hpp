#pragma once

#include "snse/field.hpp"

namespace snse {

/// Index pair of the Bessel-scale norm || J^s v ||_{L^p}.
struct NormSpec {
    double s = 0.0;
    double p = 2.0;
};

/// Sobolev norm || J^s v ||_{L^p}.  For p = 2 the value is computed exactly
/// by Parseval over coefficients; otherwise J^s v is synthesised on the
/// physical grid and |J^s v(x)| (Euclidean magnitude over components) is
/// integrated with the equal-weight grid rule.  p < 1 throws.
double sobolev_norm(const SpectralField& f, const NormSpec& spec);

inline double sobolev_norm(const SpectralField& f, double s, double p = 2.0) {
    return sobolev_norm(f, NormSpec{s, p});
}

/// || v ||_{L^2} by Parseval.
double l2_norm(const SpectralField& f);

/// || grad v ||_{L^2} (Frobenius over components and directions).
double grad_l2_norm(const SpectralField& f);

/// L^p norm of the physical-space Euclidean magnitude, p >= 1.
double lp_norm(const SpectralField& f, double p);

/// The H^{s,p}-H^{-s,q} duality bracket evaluated spectrally:
/// Re sum_k (1+|kappa|^2)^{s/2} a(k) . conj((1+|kappa|^2)^{-s/2} b(k)),
/// scaled by the domain volume.  The multipliers cancel, so the value is
/// independent of s; it equals the plain L^2 pairing.
double duality_pairing(const SpectralField& a, const SpectralField& b, double s = 0.0);

/// Cached table (1 + |kappa|^2)^s per flat index and sqrt(volume * sum w |v|^2).
const std::vector<double>& bessel_weight_table(const TorusGrid& grid, double s);
double weighted_l2_norm(const SpectralField& f, const std::vector<double>& weights);

}  // namespace snse
