#pragma once

#include <span>
#include <string>
#include <vector>

#include "snse/field.hpp"
#include "snse/noise.hpp"
#include "snse/wiener.hpp"

namespace snse {

/// One-step OU quadrature variance (1 - e^{-2 nu ksq dt}) / (2 nu ksq).
double ou_step_variance(double nu, double ksq, double dt);

/// Exponential-Euler stepper of the stochastic convolution
///   dz + nu A z dt = G_n(v) dw,  z(0) = 0,
/// with coefficients frozen at the supplied field per step:
///   z <- e^{-nu |kappa|^2 dt} z
///        + sum_j sigma_j(v_frozen) r_n(kappa_j) xi_j e_j,
/// where xi_j rescales the Wiener increment dW_j to the exact one-step OU
/// quadrature variance.  Exact in law for additive noise, weak order one
/// otherwise.  Precomputes every per-mode factor once.
class OUStepper {
  public:
    OUStepper(const NoiseSpec& spec, const NoiseBasis& basis, double nu, double dt,
              double yosida_n);

    /// Advance z by one step; fp (optional) fingerprints consumed increments.
    void step(SpectralField& z, const SpectralField& v_frozen, const WienerPath& path,
              int step_index, rng::Fingerprint* fp = nullptr);

  private:
    const NoiseBasis* basis_;
    NoiseSpec spec_;
    double inv_sqrt_dt_;
    const std::vector<double>* decay_;  ///< e^{-nu ksq dt} per flat index
    std::vector<double> noise_scale_;   ///< r_n(kappa_j) sqrt(q_j / dt)
    NoiseTables tables_;
    std::vector<double> sigma_;
};

/// Value-returning single step over an explicit increment slice.
SpectralField ou_step(const SpectralField& z, const SpectralField& v_frozen,
                      std::span<const double> dW, double dt, double nu, double yosida_n,
                      const NoiseSpec& spec, const NoiseBasis& basis);

/// Discrete trajectory of the stochastic convolution, z(0) = 0.
struct OUTrajectory {
    std::vector<double> times;
    std::vector<SpectralField> states;
};

/// Streaming Hoelder diagnostic over dyadic lags: feed states in time order;
/// value(beta) returns sup_m ||z(t_m)||_{H^delta} plus the maximum of
/// ||z(t_m) - z(t_{m'})||_{H^delta} / |t_m - t_{m'}|^beta over adjacent
/// pairs at every dyadic lag (pairs (i*2^l, (i+1)*2^l)).  Keeps O(log M)
/// fields.
class HolderAccumulator {
  public:
    HolderAccumulator(double beta, double delta) : beta_(beta), delta_(delta) {}

    void feed(int index, double time, const SpectralField& state);
    double value() const { return sup_norm_ + max_ratio_; }
    double sup_norm() const { return sup_norm_; }
    double seminorm() const { return max_ratio_; }

  private:
    double beta_;
    double delta_;
    double sup_norm_ = 0.0;
    double max_ratio_ = 0.0;
    struct Level {
        bool has = false;
        double time = 0.0;
        SpectralField state;
    };
    std::vector<Level> levels_;
    Level first_;
};

/// Hoelder norm of a stored trajectory (same pair set as the accumulator).
/// Throws std::invalid_argument for fewer than two states.
double holder_seminorm(const OUTrajectory& traj, double beta, double delta);

struct MomentRow {
    double yosida_n = 0.0;
    std::string statistic;
    double m_or_p = 0.0;
    double beta = 0.0;
    double delta = 0.0;
    double epsilon = 0.0;
    double estimate = 0.0;
    double std_error = 0.0;
    int paths = 0;
};

struct SolverConfig;

/// Monte Carlo moments of the stochastic convolution across a Yosida ladder:
/// E||z_n||^m_{L^m(0,T;H^{eps,4})} (time quadrature of the H^{eps,4} norm)
/// and E||z_n||^p_{C^beta([0,T];H^delta)}, plus the deterministic
/// Hilbert-Schmidt norm of G_n into H for contrast.  One row per
/// (n, statistic).  Throws std::invalid_argument for paths <= 0.
std::vector<MomentRow> ou_moment_study(const SolverConfig& config, int m, double epsilon,
                                       int paths, const std::vector<double>& n_ladder,
                                       double beta, double delta, int holder_p, int threads);

}  // namespace snse
