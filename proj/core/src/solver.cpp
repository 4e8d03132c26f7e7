#include "snse/solver.hpp"

#include <cmath>
#include <stdexcept>

#include "snse/fft.hpp"
#include "snse/inequalities.hpp"
#include "snse/norms.hpp"
#include "snse/operators.hpp"
#include "snse/ou.hpp"

namespace snse {

void validate(const SolverConfig& config) {
    make_grid(config.dim, config.modes, config.period, config.dealias_fraction);
    if (!(config.nu > 0.0)) throw std::invalid_argument("viscosity must be positive");
    if (!(config.horizon > 0.0)) throw std::invalid_argument("horizon must be positive");
    if (!(config.dt > 0.0)) throw std::invalid_argument("dt must be positive");
    if (config.dt > config.horizon) throw std::invalid_argument("dt exceeds the horizon");
    if (!(config.yosida_n > 0.0)) throw std::invalid_argument("yosida level must be positive");
    if (!(config.noise.g > 0.0 && config.noise.g < 1.0))
        throw std::invalid_argument("noise roughness g must lie in (0,1)");
    if (config.noise.alpha < 0.0) throw std::invalid_argument("noise decay alpha must be >= 0");
    if (config.record_stride < 0) throw std::invalid_argument("record stride must be >= 0");
}

numerical_abort::numerical_abort(int step_, const std::string& quantity_, double value_)
    : std::runtime_error("numerical abort at step " + std::to_string(step_) + ": " + quantity_ +
                         " = " + std::to_string(value_)),
      step(step_),
      quantity(quantity_),
      value(value_) {}

double phi1(double x) {
    if (std::abs(x) < 1e-5) return 1.0 + 0.5 * x + x * x / 6.0;
    return std::expm1(x) / x;
}

SpectralField make_initial_field(const SolverConfig& config, const TorusGrid& grid) {
    switch (config.initial.kind) {
        case InitialKind::zero:
            break;
        case InitialKind::shear: {
            // amplitude * (sin x_2, 0, ...): modes k = (0, +-1, 0) on component 0
            SpectralField f(grid);
            std::array<int, 3> kp{0, 1, 0}, km{0, -1, 0};
            const double a = 0.5 * config.initial.amplitude;
            f.at(0, kp) = Complex{0.0, -a};
            f.at(0, km) = Complex{0.0, a};
            f.set_solenoidal(true);
            return f;
        }
        case InitialKind::random: {
            SpectralField f = random_solenoidal_field(grid, config.initial.slope,
                                                      config.initial.seed);
            f *= config.initial.amplitude;
            return f;
        }
    }
    SpectralField f(grid);
    f.set_solenoidal(true);
    return f;
}

SpectralField make_forcing_field(const ForcingSpec& forcing, const TorusGrid& grid) {
    SpectralField f(grid);
    if (forcing.kind == ForcingKind::low_mode && forcing.amplitude != 0.0) {
        std::array<int, 3> kp{0, 1, 0}, km{0, -1, 0};
        const double a = 0.5 * forcing.amplitude;
        f.at(0, kp) = Complex{0.0, -a};
        f.at(0, km) = Complex{0.0, a};
    }
    f.set_solenoidal(true);
    return f;
}

namespace {

/// u <- e^{-nu|kappa|^2 dt} u + phi1(-nu|kappa|^2 dt) dt rhs.
SpectralField integrating_factor_step(const SpectralField& u, const SpectralField& f_t,
                                      const SpectralField& b, double dt, double nu) {
    const auto& grid = u.grid();
    const auto& tables = grid_tables(grid);
    const std::size_t n = grid.points();
    SpectralField out = u;
    for (int c = 0; c < grid.dim; ++c) {
        auto oc = out.component(c);
        auto bc = b.component(c);
        auto fc = f_t.component(c);
        for (std::size_t i = 0; i < n; ++i) {
            const double x = -nu * tables.ksq[i] * dt;
            oc[i] = std::exp(x) * oc[i] + phi1(x) * dt * (fc[i] - bc[i]);
        }
    }
    remove_mean(out);
    out.set_solenoidal(true);
    return out;
}

}  // namespace

SpectralField deterministic_step(const SpectralField& u, const SpectralField& z,
                                 const SpectralField& f_t, double dt, double nu) {
    SpectralField v = u;
    v += z;
    return integrating_factor_step(u, f_t, advection(v, v), dt, nu);
}

SpectralField direct_step(const SpectralField& v, const SpectralField& f_t,
                          std::span<const double> dW, double dt, double nu, double yosida_n,
                          const NoiseSpec& spec, const NoiseBasis& basis) {
    if (dW.size() != static_cast<std::size_t>(basis.size()))
        throw std::invalid_argument("direct_step: increment slice length mismatch");
    SpectralField out = integrating_factor_step(v, f_t, advection(v, v), dt, nu);
    std::vector<double> sigmas(basis.size());
    sigma_eval_all(spec, basis, v, sigmas);
    for (int j = 0; j < basis.size(); ++j) {
        const double w = sigmas[j] * yosida_multiplier(yosida_n, basis.mode(j).ksq) * dW[j];
        if (w != 0.0) basis.add_scaled(out, j, w);
    }
    remove_mean(out);
    out.set_solenoidal(true);
    return out;
}

namespace {

/// Exponentially exact one-step integral of ||grad u||^2 along the semigroup
/// flow started at u: sum_k ksq |u(k)|^2 (1 - e^{-2 nu ksq dt}) / (2 nu ksq).
double dissipation_quadrature(const SpectralField& u, double dt, double nu) {
    const auto& tables = grid_tables(u.grid());
    const std::size_t n = u.points();
    double sum = 0.0;
    for (int c = 0; c < u.components(); ++c) {
        auto comp = u.component(c);
        for (std::size_t i = 0; i < n; ++i) {
            const double ksq = tables.ksq[i];
            if (ksq == 0.0) continue;
            sum += std::norm(comp[i]) * -std::expm1(-2.0 * nu * ksq * dt) / (2.0 * nu);
        }
    }
    return u.grid().volume() * sum;
}

}  // namespace

TrajectorySample simulate(const SolverConfig& config) {
    validate(config);
    const TorusGrid grid = config.grid();
    const NoiseBasis basis(grid, config.noise.modes);
    NoiseSpec spec = config.noise;
    spec.modes = basis.size();

    const int steps = config.steps();
    const std::uint64_t wiener_seed = rng::mix(config.seed, spec.seed, 0x776e72ULL);
    const WienerPath path(config.dt, std::max(steps, 1), basis.size(), wiener_seed);

    SpectralField u = make_initial_field(config, grid);
    SpectralField z(grid);
    z.set_solenoidal(true);
    const SpectralField f = make_forcing_field(config.forcing, grid);

    TrajectorySample sample;
    sample.wiener_seed = wiener_seed;
    sample.energy_constant = default_energy_constant(grid, config.nu);
    sample.forcing_hm1 = sobolev_norm(f, -1.0, 2.0);
    const double v0_energy = [&] {
        const double e = l2_norm(u);
        return e * e;
    }();

    auto& diag = sample.diagnostics;
    const double c_energy = sample.energy_constant;
    const double f_sq = sample.forcing_hm1 * sample.forcing_hm1;
    const int d = grid.dim;
    const double z_exponent = 8.0 / (4.0 - d);

    rng::Fingerprint fingerprint;
    std::vector<double> sigmas(basis.size());
    double dissipation_integral = 0.0;

    auto record_diag = [&](int s) {
        const double t = s * config.dt;
        const double eu = l2_norm(u);
        const double gu = grad_l2_norm(u);
        const double zl4 = lp_norm(z, 4.0);
        if (!std::isfinite(eu)) throw numerical_abort(s, "||u||_L2", eu);
        if (!std::isfinite(gu)) throw numerical_abort(s, "||grad u||_L2", gu);
        if (!std::isfinite(zl4)) throw numerical_abort(s, "||z||_L4", zl4);
        const double phi = 0.5 * config.nu + 2.0 * c_energy * std::pow(zl4, z_exponent);
        const double psi = 2.0 * c_energy * (std::pow(zl4, 4.0) + f_sq);
        diag.t.push_back(t);
        diag.energy_u.push_back(eu * eu);
        diag.enstrophy_u.push_back(gu * gu);
        diag.dissipation.push_back(dissipation_integral);
        diag.z_l4.push_back(zl4);
        diag.phi.push_back(phi);
        diag.psi.push_back(psi);
        if (diag.phi_integral.empty()) {
            diag.phi_integral.push_back(0.0);
            diag.psi_integral.push_back(0.0);
        } else {
            const std::size_t m = diag.phi.size();
            diag.phi_integral.push_back(diag.phi_integral.back() +
                                        0.5 * config.dt * (diag.phi[m - 2] + diag.phi[m - 1]));
            diag.psi_integral.push_back(diag.psi_integral.back() +
                                        0.5 * config.dt * (diag.psi[m - 2] + diag.psi[m - 1]));
        }
        const double growth = std::exp(diag.phi_integral.back());
        diag.majorant.push_back(v0_energy * growth + growth * diag.psi_integral.back());
    };

    auto record_fields = [&](int s) {
        if (config.record_stride <= 0) return;
        if (s % config.record_stride != 0 && s != steps) return;
        SpectralField v = z;
        v += u;
        sample.times.push_back(s * config.dt);
        sample.v.push_back(v);
        sample.z.push_back(z);
        sample.u.push_back(u);
    };

    try {
        record_diag(0);
        record_fields(0);
        for (int s = 0; s < steps; ++s) {
            SpectralField v = z;
            v += u;
            const SpectralField b = advection(v, v);
            diag.trilinear.push_back(duality_pairing(b, u));
            diag.forcing_u.push_back(duality_pairing(f, u));
            dissipation_integral += dissipation_quadrature(u, config.dt, config.nu);
            SpectralField u_next = integrating_factor_step(u, f, b, config.dt, config.nu);
            ou_step_inplace(z, v, spec, basis, path, s, config.dt, config.nu, config.yosida_n,
                            sigmas, &fingerprint);
            u = std::move(u_next);
            record_diag(s + 1);
            record_fields(s + 1);
        }
        // final-time pairings keep the diagnostic columns aligned
        SpectralField v = z;
        v += u;
        diag.trilinear.push_back(duality_pairing(advection(v, v), u));
        diag.forcing_u.push_back(duality_pairing(f, u));
    } catch (numerical_abort& abort) {
        abort.partial = std::move(sample.diagnostics);
        throw;
    }

    sample.final_u = u;
    sample.final_z = z;
    sample.final_v = z;
    sample.final_v += u;
    sample.increment_fingerprint = fingerprint.h;
    return sample;
}

double uniqueness_weight(const SpectralField& v1, const SpectralField& v2, double lipschitz_lg,
                         double c_bar, double g) {
    if (!(g > 0.0 && g < 1.0)) throw std::invalid_argument("uniqueness_weight: g must lie in (0,1)");
    const double s = 0.5 * (1.0 - g);
    const double q = 4.0 / (1.0 - g);
    const double n1 = sobolev_norm(v1, s, 2.0);
    const double n2 = sobolev_norm(v2, s, 2.0);
    return 1.0 + lipschitz_lg * lipschitz_lg + 2.0 * c_bar * (std::pow(n1, q) + std::pow(n2, q));
}

}  // namespace snse
