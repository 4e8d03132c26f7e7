#include "snse/ou.hpp"

#include <cmath>
#include <stdexcept>

#include "snse/norms.hpp"
#include "snse/operators.hpp"
#include "snse/parallel.hpp"
#include "snse/solver.hpp"

namespace snse {

namespace {

/// One-step OU quadrature variance (1 - e^{-2 nu ksq dt}) / (2 nu ksq).
double ou_step_variance(double nu, double ksq, double dt) {
    const double x = 2.0 * nu * ksq * dt;
    if (x < 1e-8) return dt * (1.0 - 0.5 * x);  // series fallback, ksq -> 0
    return -std::expm1(-x) / (2.0 * nu * ksq);
}

}  // namespace

void ou_step_inplace(SpectralField& z, const SpectralField& v_frozen, const NoiseSpec& spec,
                     const NoiseBasis& basis, const WienerPath& path, int step, double dt,
                     double nu, double yosida_n, std::span<double> sigma_buf,
                     rng::Fingerprint* fp) {
    const auto& grid = z.grid();
    const auto& tables = grid_tables(grid);
    const std::size_t n = grid.points();
    for (int c = 0; c < grid.dim; ++c) {
        auto comp = z.component(c);
        for (std::size_t i = 0; i < n; ++i) comp[i] *= std::exp(-nu * tables.ksq[i] * dt);
    }
    sigma_eval_all(spec, basis, v_frozen, sigma_buf);
    const double inv_sqrt_dt = 1.0 / std::sqrt(dt);
    for (int j = 0; j < basis.size(); ++j) {
        const auto& mode = basis.mode(j);
        const double dw = path.increment(step, j);
        if (fp != nullptr) fp->absorb(dw);
        const double xi = dw * inv_sqrt_dt * std::sqrt(ou_step_variance(nu, mode.ksq, dt));
        const double w = sigma_buf[j] * yosida_multiplier(yosida_n, mode.ksq) * xi;
        if (w != 0.0) basis.add_scaled(z, j, w);
    }
    z.set_solenoidal(true);
}

SpectralField ou_step(const SpectralField& z, const SpectralField& v_frozen,
                      std::span<const double> dW, double dt, double nu, double yosida_n,
                      const NoiseSpec& spec, const NoiseBasis& basis) {
    if (!(dt > 0.0)) throw std::invalid_argument("ou_step: dt must be positive");
    if (dW.size() != static_cast<std::size_t>(basis.size()))
        throw std::invalid_argument("ou_step: increment slice length mismatch");
    SpectralField out = stokes_semigroup(z, dt, nu);
    std::vector<double> sigmas(basis.size());
    sigma_eval_all(spec, basis, v_frozen, sigmas);
    const double inv_sqrt_dt = 1.0 / std::sqrt(dt);
    for (int j = 0; j < basis.size(); ++j) {
        const auto& mode = basis.mode(j);
        const double xi = dW[j] * inv_sqrt_dt * std::sqrt(ou_step_variance(nu, mode.ksq, dt));
        const double w = sigmas[j] * yosida_multiplier(yosida_n, mode.ksq) * xi;
        if (w != 0.0) basis.add_scaled(out, j, w);
    }
    out.set_solenoidal(true);
    return out;
}

void HolderAccumulator::feed(int index, double time, const SpectralField& state) {
    const double norm = sobolev_norm(state, delta_, 2.0);
    sup_norm_ = std::max(sup_norm_, norm);
    if (index == 0) {
        levels_.assign(1, Level{});
        levels_[0] = {true, time, state};
        first_ = {true, time, state};
        max_ratio_ = 0.0;
        return;
    }
    auto pair_with = [&](const Level& prev) {
        SpectralField diff = state;
        diff -= prev.state;
        const double lag = time - prev.time;
        if (lag > 0.0) {
            const double ratio = sobolev_norm(diff, delta_, 2.0) / std::pow(lag, beta_);
            max_ratio_ = std::max(max_ratio_, ratio);
        }
    };
    int idx = index;
    for (int level = 0;; ++level, idx >>= 1) {
        // invariant: 2^level divides index
        if (static_cast<std::size_t>(level) >= levels_.size()) levels_.resize(level + 1);
        Level& slot = levels_[level];
        if (slot.has)
            pair_with(slot);
        else if (first_.has)
            pair_with(first_);  // the (0, 2^level) pair seeds this lag
        slot = {true, time, state};
        if (idx % 2 != 0) break;
    }
}

double holder_seminorm(const OUTrajectory& traj, double beta, double delta) {
    if (traj.states.size() < 2)
        throw std::invalid_argument("holder_seminorm: trajectory needs at least two states");
    HolderAccumulator acc(beta, delta);
    for (std::size_t m = 0; m < traj.states.size(); ++m)
        acc.feed(static_cast<int>(m), traj.times[m], traj.states[m]);
    return acc.value();
}

std::vector<MomentRow> ou_moment_study(const SolverConfig& config, int m, double epsilon,
                                       int paths, const std::vector<double>& n_ladder,
                                       double beta, double delta, int holder_p, int threads) {
    if (paths <= 0) throw std::invalid_argument("ou_moment_study: zero paths");
    if (m < 1) throw std::invalid_argument("ou_moment_study: moment order must be positive");
    if (epsilon < 0.0) throw std::invalid_argument("ou_moment_study: epsilon must be >= 0");
    validate(config);

    const TorusGrid grid = config.grid();
    std::vector<MomentRow> rows;
    for (double level : n_ladder) {
        // per-path statistics, merged in path order
        std::vector<double> lm_stat(paths), holder_stat(paths);
        parallel_for(paths, threads, [&](int p) {
            SolverConfig local = config;
            local.yosida_n = level;
            local.seed = rng::mix(config.seed, 0x0c0ffeeULL, static_cast<std::uint64_t>(p));
            local.record_stride = 0;

            const NoiseBasis basis(grid, local.noise.modes);
            NoiseSpec spec = local.noise;
            spec.modes = basis.size();
            const WienerPath path(local.dt, local.steps(), basis.size(), local.seed);

            SpectralField z(grid), u = make_initial_field(local, grid);
            const SpectralField f = make_forcing_field(local.forcing, grid);
            std::vector<double> sigmas(basis.size());
            HolderAccumulator holder(beta, delta);

            double lm_integral = 0.0;
            double previous = 0.0;
            const int steps = local.steps();
            for (int s = 0; s <= steps; ++s) {
                const double norm_eps4 = sobolev_norm(z, epsilon, 4.0);
                const double integrand = std::pow(norm_eps4, m);
                if (s > 0) lm_integral += 0.5 * local.dt * (previous + integrand);
                previous = integrand;
                holder.feed(s, s * local.dt, z);
                if (s == steps) break;
                SpectralField v = z;
                v += u;
                SpectralField u_next = deterministic_step(u, z, f, local.dt, local.nu);
                ou_step_inplace(z, v, spec, basis, path, s, local.dt, local.nu, level, sigmas);
                u = std::move(u_next);
            }
            lm_stat[p] = lm_integral;
            holder_stat[p] = std::pow(holder.value(), holder_p);
        });

        auto mean_se = [&](const std::vector<double>& xs) {
            double mean = 0.0;
            for (double x : xs) mean += x;
            mean /= xs.size();
            double var = 0.0;
            for (double x : xs) var += (x - mean) * (x - mean);
            var = xs.size() > 1 ? var / (xs.size() - 1.0) : 0.0;
            return std::pair<double, double>{mean, std::sqrt(var / xs.size())};
        };

        const auto [lm_mean, lm_se] = mean_se(lm_stat);
        rows.push_back({level, "z_Lm_Heps4", static_cast<double>(m), beta, delta, epsilon, lm_mean,
                        lm_se, paths});
        const auto [h_mean, h_se] = mean_se(holder_stat);
        rows.push_back({level, "z_holder_Hdelta", static_cast<double>(holder_p), beta, delta,
                        epsilon, h_mean, h_se, paths});

        NoiseSpec spec = config.noise;
        const NoiseBasis basis(grid, spec.modes);
        rows.push_back({level, "Gn_HS_H", 2.0, 0.0, 0.0, 0.0,
                        additive_hs_norm(spec, basis.modes(), 0.0, level), 0.0, 0});
    }
    return rows;
}

}  // namespace snse
