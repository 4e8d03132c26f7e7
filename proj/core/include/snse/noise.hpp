#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>

#include "snse/basis.hpp"
#include "snse/field.hpp"

namespace snse {

enum class NoiseFlavor { additive, lipschitz_multiplicative };

std::string to_string(NoiseFlavor f);
NoiseFlavor noise_flavor_from_string(const std::string& s);

/// Diagonal noise covariance G(v) e_j = sigma_j(v) e_j over the
/// divergence-free trig basis, with mode amplitudes
/// a_j = (1 + |kappa_j|^2)^{-alpha/2}.
///
///   additive:                  sigma_j(v) = a_j
///   lipschitz_multiplicative:  sigma_j(v) = a_j (1 + tanh<J^{-g} v, J^{-g} e_j>)/2
///
/// g in (0,1) is the roughness index, alpha >= 0 the coefficient decay,
/// modes the basis truncation (0 means every dealiased mode of the grid).
struct NoiseSpec {
    double g = 0.5;
    double alpha = 0.75;
    int modes = 0;
    NoiseFlavor flavor = NoiseFlavor::lipschitz_multiplicative;
    std::uint64_t seed = 0;
};

/// a_j for one basis mode.
double mode_amplitude(const NoiseSpec& spec, const BasisMode& mode);

/// sigma_j(v); v may be empty for the additive flavor.
double sigma_eval(const NoiseSpec& spec, const NoiseBasis& basis, int j, const SpectralField& v);

/// All sigma_j(v) in one O(J) pass.
void sigma_eval_all(const NoiseSpec& spec, const NoiseBasis& basis, const SpectralField& v,
                    std::span<double> out);

/// Precomputed per-mode factors of the sigma family (a_j and the J^{-2g}
/// smoothing weight of the inner product).
struct NoiseTables {
    std::vector<double> amplitude;
    std::vector<double> smoothing;
};
NoiseTables make_noise_tables(const NoiseSpec& spec, const NoiseBasis& basis);
void sigma_eval_all(const NoiseSpec& spec, const NoiseBasis& basis, const SpectralField& v,
                    const NoiseTables& tables, std::span<double> out);

/// G(v) y = sum_j sigma_j(v) y_j e_j.  y.size() must equal basis.size().
SpectralField apply_G(const NoiseSpec& spec, const NoiseBasis& basis, const SpectralField& v,
                      std::span<const double> y);

/// G_n(v) y = R_n G(v) y (Yosida smoothing of the output).
SpectralField apply_Gn(const NoiseSpec& spec, const NoiseBasis& basis, double yosida_n,
                       const SpectralField& v, std::span<const double> y);

/// gamma-radonifying norm of G(v) into H^{s,p}, p in {2, 4}.
/// p=2: Hilbert-Schmidt sum (sum_j sigma_j^2 (1+|kappa_j|^2)^s)^{1/2}.
/// p=4: L^4 grid quadrature of the square function
///      x -> (sum_j sigma_j^2 |(J^s e_j)(x)|^2)^{1/2}.
/// Other p throws.  Optional yosida_n smooths per-mode (G_n instead of G).
double gamma_radonifying_norm(const NoiseSpec& spec, const NoiseBasis& basis,
                              const SpectralField& v, double s, double p,
                              double yosida_n = std::numeric_limits<double>::infinity());

/// Grid-free Hilbert-Schmidt norm into H^s for the additive flavor:
/// (sum_j a_j^2 (1+|kappa_j|^2)^s)^{1/2} over an explicit mode list.
double additive_hs_norm(const NoiseSpec& spec, std::span<const BasisMode> modes, double s,
                        double yosida_n = std::numeric_limits<double>::infinity());

/// Analytic Lipschitz constant of v -> G(v) as a map H^{-g} -> gamma(Y; H^{-g}):
/// ((1/4) sum_j a_j^2 (1+|kappa_j|^2)^{-2g})^{1/2}; zero for the additive flavor.
double lipschitz_constant(const NoiseSpec& spec, std::span<const BasisMode> modes);

/// True if the rough-regime summability alpha + g > dim/2 holds (the
/// infinite-family condition (G1); finite truncations are always usable).
bool rough_regime_summable(const NoiseSpec& spec, int dim);

}  // namespace snse
