#include "snse/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "snse/norms.hpp"
#include "snse/operators.hpp"
#include "snse/rng.hpp"

namespace snse {

std::string to_string(InequalityId id) {
    switch (id) {
        case InequalityId::BIL_GL: return "BIL_GL";
        case InequalityId::BIL_L4: return "BIL_L4";
        case InequalityId::TRIL44: return "TRIL44";
        case InequalityId::GN: return "GN";
        case InequalityId::INTERP: return "INTERP";
        case InequalityId::SEMI: return "SEMI";
        case InequalityId::SOBEMB: return "SOBEMB";
        case InequalityId::GN_HS: return "GN_HS";
        case InequalityId::UNIQ_TRIL: return "UNIQ_TRIL";
    }
    throw std::logic_error("unreachable inequality id");
}

InequalityId inequality_from_string(const std::string& s) {
    for (InequalityId id : all_inequalities())
        if (to_string(id) == s) return id;
    throw std::invalid_argument("unknown inequality id: " + s);
}

std::vector<InequalityId> all_inequalities() {
    return {InequalityId::BIL_GL, InequalityId::BIL_L4, InequalityId::TRIL44,
            InequalityId::GN,     InequalityId::INTERP, InequalityId::SEMI,
            InequalityId::SOBEMB, InequalityId::GN_HS,  InequalityId::UNIQ_TRIL};
}

SpectralField random_solenoidal_field(const TorusGrid& grid, double slope, std::uint64_t seed) {
    SpectralField f(grid);
    const rng::CounterRng gauss{rng::mix(seed, 0x8f1e1dULL)};
    const int lim = grid.dealias_limit();
    const double scale2 = grid.kappa_scale() * grid.kappa_scale();
    const int zmin = grid.dim == 3 ? -lim : 0;
    const int zmax = grid.dim == 3 ? lim : 0;
    std::uint64_t counter = 0;
    for (int a = -lim; a <= lim; ++a) {
        for (int b = -lim; b <= lim; ++b) {
            for (int c = zmin; c <= zmax; ++c) {
                std::array<int, 3> k{a, b, c};
                const int ksq_i = a * a + b * b + c * c;
                ++counter;
                if (ksq_i == 0) continue;
                const bool positive = (k[0] != 0) ? k[0] > 0 : (k[1] != 0 ? k[1] > 0 : k[2] > 0);
                if (!positive) continue;
                const double decay = std::pow(1.0 + scale2 * ksq_i, 0.5 * slope);
                // one complex Gaussian amplitude per polarisation
                std::array<Complex, 2> amp{};
                const int pols = grid.dim - 1;
                for (int p = 0; p < pols; ++p)
                    amp[p] = decay * Complex{gauss.normal(counter, 2 * p), gauss.normal(counter, 2 * p + 1)};
                // build the polarisation vectors as in the noise basis
                std::array<std::array<double, 3>, 2> pol{};
                const double kn = std::sqrt(static_cast<double>(ksq_i));
                if (grid.dim == 2) {
                    pol[0] = {-k[1] / kn, k[0] / kn, 0.0};
                } else {
                    std::array<double, 3> kd{static_cast<double>(k[0]), static_cast<double>(k[1]),
                                             static_cast<double>(k[2])};
                    int axis = 0;
                    for (int i = 1; i < 3; ++i)
                        if (std::abs(kd[i]) < std::abs(kd[axis])) axis = i;
                    std::array<double, 3> e{0.0, 0.0, 0.0};
                    e[axis] = 1.0;
                    std::array<double, 3> p1{e[1] * kd[2] - e[2] * kd[1],
                                             e[2] * kd[0] - e[0] * kd[2],
                                             e[0] * kd[1] - e[1] * kd[0]};
                    double p1n = std::sqrt(p1[0] * p1[0] + p1[1] * p1[1] + p1[2] * p1[2]);
                    for (auto& x : p1) x /= p1n;
                    std::array<double, 3> p2{kd[1] * p1[2] - kd[2] * p1[1],
                                             kd[2] * p1[0] - kd[0] * p1[2],
                                             kd[0] * p1[1] - kd[1] * p1[0]};
                    double p2n = std::sqrt(p2[0] * p2[0] + p2[1] * p2[1] + p2[2] * p2[2]);
                    for (auto& x : p2) x /= p2n;
                    pol[0] = p1;
                    pol[1] = p2;
                }
                std::array<int, 3> mk{-a, -b, -c};
                for (int p = 0; p < pols; ++p) {
                    for (int comp = 0; comp < grid.dim; ++comp) {
                        f.at(comp, k) += amp[p] * pol[p][comp];
                        f.at(comp, mk) += std::conj(amp[p]) * pol[p][comp];
                    }
                }
            }
        }
    }
    const double norm = l2_norm(f);
    if (norm > 0.0) f *= 1.0 / norm;
    f.set_solenoidal(true);
    return f;
}

namespace {

struct SampleRng {
    rng::CounterRng rng;
    std::uint64_t sample = 0;
    double uniform(std::uint64_t tag) const { return rng.uniform(sample, tag); }
    std::uint64_t subseed(std::uint64_t tag) const { return rng::mix(rng.key, sample, tag); }
};

double slope_draw(const SampleRng& s, std::uint64_t tag) { return -3.0 + 3.0 * s.uniform(tag); }

}  // namespace

EstimateReport run_inequality_suite(InequalityId id, int samples, const TorusGrid& grid,
                                    std::uint64_t seed, double g) {
    if (samples <= 0) throw std::invalid_argument("inequality suite: samples must be positive");
    if (!(g > 0.0 && g < 1.0)) throw std::invalid_argument("inequality suite: g must lie in (0,1)");

    EstimateReport report;
    report.inequality_id = to_string(id);
    report.samples = samples;
    report.resolution = grid.modes;
    report.seed = seed;
    report.g = g;
    report.dim = grid.dim;
    // Lemma-level inequalities are stated for d = 2; d = 3 runs are labelled
    // as exploration without a paper claim.
    report.paper_claim = !(grid.dim == 3 && (id == InequalityId::BIL_GL || id == InequalityId::UNIQ_TRIL));

    const double shalf = 0.5 * (1.0 - g);

    double max_ratio = 0.0;
    for (int i = 0; i < samples; ++i) {
        SampleRng s{rng::CounterRng{rng::mix(seed, 0x1e71ULL)}, static_cast<std::uint64_t>(i)};
        double ratio = 0.0;
        switch (id) {
            case InequalityId::BIL_GL: {
                const SpectralField u = random_solenoidal_field(grid, slope_draw(s, 1), s.subseed(2));
                const SpectralField v = random_solenoidal_field(grid, slope_draw(s, 3), s.subseed(4));
                const double lhs = sobolev_norm(advection(u, v), -1.0 - g, 2.0) +
                                   sobolev_norm(advection(v, u), -1.0 - g, 2.0);
                const double rhs = std::pow(sobolev_norm(u, -g, 2.0), shalf) *
                                   std::pow(sobolev_norm(u, 1.0 - g, 2.0), 1.0 - shalf) *
                                   sobolev_norm(v, shalf, 2.0);
                ratio = lhs / rhs;
                break;
            }
            case InequalityId::BIL_L4: {
                const SpectralField u = random_solenoidal_field(grid, slope_draw(s, 1), s.subseed(2));
                const SpectralField v = random_solenoidal_field(grid, slope_draw(s, 3), s.subseed(4));
                const double lhs = sobolev_norm(advection(u, v), -1.0, 2.0);
                ratio = lhs / (lp_norm(u, 4.0) * lp_norm(v, 4.0));
                break;
            }
            case InequalityId::TRIL44: {
                const SpectralField u = random_solenoidal_field(grid, slope_draw(s, 1), s.subseed(2));
                const SpectralField v = random_solenoidal_field(grid, slope_draw(s, 3), s.subseed(4));
                const SpectralField z = random_solenoidal_field(grid, slope_draw(s, 5), s.subseed(6));
                const double lhs = std::abs(duality_pairing(advection(u, v), z));
                ratio = lhs / (lp_norm(u, 4.0) * grad_l2_norm(v) * lp_norm(z, 4.0));
                break;
            }
            case InequalityId::GN: {
                const SpectralField v = random_solenoidal_field(grid, slope_draw(s, 1), s.subseed(2));
                const double frac = 0.25 * grid.dim;
                ratio = lp_norm(v, 4.0) /
                        (std::pow(l2_norm(v), 1.0 - frac) * std::pow(grad_l2_norm(v), frac));
                break;
            }
            case InequalityId::INTERP: {
                const SpectralField u = random_solenoidal_field(grid, slope_draw(s, 1), s.subseed(2));
                ratio = sobolev_norm(u, shalf, 2.0) /
                        (std::pow(sobolev_norm(u, -g, 2.0), shalf) *
                         std::pow(sobolev_norm(u, 1.0 - g, 2.0), 1.0 - shalf));
                break;
            }
            case InequalityId::SEMI: {
                // operator-norm scan over a t grid: multiplier sup vs M(1 + t^{-1/2})
                const double t = 0.01 + 0.99 * s.uniform(1);
                const auto& tables = grid_tables(grid);
                double sup = 0.0;
                for (double ksq : tables.ksq)
                    sup = std::max(sup, std::exp(-ksq * t) * std::sqrt(1.0 + ksq));
                ratio = sup / (1.0 + 1.0 / std::sqrt(t));
                break;
            }
            case InequalityId::SOBEMB: {
                const SpectralField v = random_solenoidal_field(grid, slope_draw(s, 1), s.subseed(2));
                ratio = lp_norm(v, 4.0) / sobolev_norm(v, 0.25 * grid.dim, 2.0);
                break;
            }
            case InequalityId::GN_HS: {
                const SpectralField v = random_solenoidal_field(grid, slope_draw(s, 1), s.subseed(2));
                NoiseSpec spec;
                spec.g = g;
                spec.alpha = 0.75;
                spec.flavor = NoiseFlavor::lipschitz_multiplicative;
                const NoiseBasis basis(grid, std::min(256, NoiseBasis::dealiased_count(grid)));
                spec.modes = basis.size();
                const double n_level = std::pow(4.0, 1.0 + (i % 4));
                const double lhs = gamma_radonifying_norm(spec, basis, v, 0.0, 2.0, n_level);
                // ||R_n||_{L(H;H^g)} = sup_r r_n(r) (1+r)^{g/2} over grid wavenumbers
                const auto& tables = grid_tables(grid);
                double rn_norm = 0.0;
                for (double ksq : tables.ksq)
                    rn_norm = std::max(rn_norm,
                                       yosida_multiplier(n_level, ksq) * std::pow(1.0 + ksq, 0.5 * g));
                const double rhs = rn_norm * gamma_radonifying_norm(spec, basis, v, -g, 2.0);
                ratio = lhs / rhs;
                break;
            }
            case InequalityId::UNIQ_TRIL: {
                const SpectralField vdiff =
                    random_solenoidal_field(grid, slope_draw(s, 1), s.subseed(2));
                SpectralField v1 = random_solenoidal_field(grid, slope_draw(s, 3), s.subseed(4));
                // amplitude sweep explores the Young balance of the bound
                v1 *= std::pow(10.0, -1.5 + 3.0 * s.uniform(5));
                const SpectralField bterm = advection(vdiff, v1);
                const double lhs =
                    std::abs(duality_pairing(bessel_potential(bterm, -g), bessel_potential(vdiff, -g)));
                const double absorbed = 0.25 * std::pow(sobolev_norm(vdiff, 1.0 - g, 2.0), 2.0);
                const double excess = lhs - absorbed;
                if (excess <= 0.0) {
                    ratio = 0.0;
                    break;
                }
                const double rhs = std::pow(sobolev_norm(v1, shalf, 2.0), 4.0 / (1.0 - g)) *
                                   std::pow(sobolev_norm(vdiff, -g, 2.0), 2.0);
                ratio = excess / rhs;
                break;
            }
        }
        if (!std::isfinite(ratio)) throw std::runtime_error("inequality suite: non-finite ratio");
        max_ratio = std::max(max_ratio, ratio);
    }
    report.max_ratio = max_ratio;
    report.calibrated_constant = max_ratio;
    return report;
}

YosidaGrowthReport yosida_growth_study(double t_exponent, const std::vector<double>& n_ladder,
                                       const TorusGrid& grid) {
    if (!(t_exponent > 0.0 && t_exponent < 2.0))
        throw std::invalid_argument("yosida growth: exponent must lie in (0,2)");
    YosidaGrowthReport report;
    report.t_exponent = t_exponent;
    const auto& tables = grid_tables(grid);
    for (double n : n_ladder) {
        double discrete = 0.0;
        for (double ksq : tables.ksq) {
            if (ksq == 0.0) continue;  // mean-free fields
            discrete = std::max(discrete,
                                yosida_multiplier(n, ksq) * std::pow(1.0 + ksq, 0.5 * t_exponent));
        }
        // continuous sup of n (1+r)^{t/2} / (n+r) at r* = (tn-2)/(2-t)
        const double rstar = std::max(0.0, (t_exponent * n - 2.0) / (2.0 - t_exponent));
        const double analytic =
            n * std::pow(1.0 + rstar, 0.5 * t_exponent) / (n + rstar);
        report.n_values.push_back(n);
        report.discrete_sup.push_back(discrete);
        report.analytic_sup.push_back(analytic);
    }
    // least-squares slope of log(discrete) against log(n)
    const std::size_t m = report.n_values.size();
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double x = std::log(report.n_values[i]);
        const double y = std::log(report.discrete_sup[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    report.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    return report;
}

SpectralField advection_reference(const SpectralField& u, const SpectralField& v) {
    const auto& grid = u.grid();
    if (!(grid == v.grid())) throw std::invalid_argument("advection_reference: grid mismatch");
    const int band = grid.modes / 4;
    const double scale = grid.kappa_scale();

    // gather supports, verifying the band limit
    struct Entry {
        std::array<int, 3> k;
        int comp;
        Complex value;
    };
    auto gather = [&](const SpectralField& f) {
        std::vector<Entry> entries;
        for (std::size_t i = 0; i < grid.points(); ++i) {
            const auto k = grid.wavevector(i);
            for (int c = 0; c < grid.dim; ++c) {
                const Complex val = f.at(c, i);
                if (val == Complex{0.0, 0.0}) continue;
                for (int a = 0; a < grid.dim; ++a)
                    if (std::abs(k[a]) > band)
                        throw std::invalid_argument(
                            "advection_reference: input exceeds the N/4 band limit");
                entries.push_back({k, c, val});
            }
        }
        return entries;
    };
    const auto ue = gather(u);
    const auto ve = gather(v);

    SpectralField out(grid);
    for (const auto& a : ue) {
        for (const auto& b : ve) {
            // (u . grad) v contribution: u_a(k') * i kappa_{a.comp} ... indexes:
            // component of the output is b.comp; the derivative direction is a.comp.
            const Complex deriv{0.0, scale * b.k[a.comp]};
            const Complex value = a.value * deriv * b.value;
            std::array<int, 3> k{a.k[0] + b.k[0], a.k[1] + b.k[1], a.k[2] + b.k[2]};
            bool inside = true;
            for (int c = 0; c < grid.dim; ++c)
                if (k[c] < -grid.modes / 2 + 1 || k[c] > grid.modes / 2) inside = false;
            if (!inside) continue;
            out.at(b.comp, k) += value;
        }
    }
    apply_dealias_mask(out);
    SpectralField projected = leray_project(out);
    remove_mean(projected);
    projected.set_solenoidal(true);
    return projected;
}

StochasticMomentReport stochastic_moment_study(int m, int paths, const NoiseSpec& spec,
                                               const TorusGrid& grid,
                                               const std::vector<double>& t_values,
                                               std::uint64_t seed) {
    if (m < 2 || m % 2 != 0)
        throw std::invalid_argument("stochastic moment study: m must be even and >= 2");
    if (paths <= 0) throw std::invalid_argument("stochastic moment study: zero paths");
    if (t_values.size() < 2)
        throw std::invalid_argument("stochastic moment study: need at least two times");

    const NoiseBasis basis(grid, spec.modes);
    NoiseSpec resolved = spec;
    resolved.modes = basis.size();
    // frozen coefficients at v = 0
    std::vector<double> sigmas(basis.size());
    sigma_eval_all(resolved, basis, SpectralField{}, sigmas);
    std::vector<double> hweight(basis.size());
    for (int j = 0; j < basis.size(); ++j)
        hweight[j] = std::pow(1.0 + basis.mode(j).ksq, -resolved.g);

    StochasticMomentReport report;
    report.m = m;
    report.t_values = t_values;

    const rng::CounterRng gauss{rng::mix(seed, 0x6d6f6dULL)};
    std::vector<double> sums(t_values.size(), 0.0), sums2(t_values.size(), 0.0);
    for (int p = 0; p < paths; ++p) {
        // W_j(t) realised consistently across the t grid by summing segments
        std::vector<double> w(basis.size(), 0.0);
        double t_prev = 0.0;
        for (std::size_t ti = 0; ti < t_values.size(); ++ti) {
            const double t = t_values[ti];
            const double seg = t - t_prev;
            if (seg < 0.0)
                throw std::invalid_argument("stochastic moment study: times must increase");
            const double sd = std::sqrt(seg);
            for (int j = 0; j < basis.size(); ++j)
                w[j] += sd * gauss.normal(rng::mix(p, ti), static_cast<std::uint64_t>(j));
            t_prev = t;
            double norm_sq = 0.0;
            for (int j = 0; j < basis.size(); ++j) {
                const double c = sigmas[j] * w[j];
                norm_sq += c * c * hweight[j];
            }
            const double value = std::pow(norm_sq, 0.5 * m);
            sums[ti] += value;
            sums2[ti] += value * value;
        }
    }
    for (std::size_t ti = 0; ti < t_values.size(); ++ti) {
        const double mean = sums[ti] / paths;
        const double var = std::max(0.0, sums2[ti] / paths - mean * mean);
        report.estimates.push_back(mean);
        report.std_errors.push_back(std::sqrt(var / paths));
        double exact = 0.0;
        if (m == 2) {
            for (int j = 0; j < basis.size(); ++j)
                exact += sigmas[j] * sigmas[j] * hweight[j] * t_values[ti];
        }
        report.exact_m2.push_back(exact);
    }
    report.scaling_ratio = report.estimates.back() / report.estimates.front();
    report.expected_ratio = std::pow(t_values.back() / t_values.front(), 0.5 * m);
    return report;
}

double calibrate_gn_constant(const TorusGrid& grid, int samples, std::uint64_t seed) {
    double worst = 0.0;
    const double frac = 0.25 * grid.dim;
    for (int i = 0; i < samples; ++i) {
        const rng::CounterRng r{rng::mix(seed, 0x474eULL)};
        const double slope = -3.0 + 3.0 * r.uniform(i, 1);
        const SpectralField v = random_solenoidal_field(grid, slope, rng::mix(seed, i, 2));
        worst = std::max(worst, lp_norm(v, 4.0) / (std::pow(l2_norm(v), 1.0 - frac) *
                                                   std::pow(grad_l2_norm(v), frac)));
    }
    return worst;
}

double calibrate_uniqueness_constant(const TorusGrid& grid, int samples, std::uint64_t seed,
                                     double g) {
    const EstimateReport report =
        run_inequality_suite(InequalityId::UNIQ_TRIL, samples, grid, seed, g);
    return report.calibrated_constant;
}

}  // namespace snse
