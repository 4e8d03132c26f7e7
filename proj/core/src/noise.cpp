#include "snse/noise.hpp"

#include <cmath>
#include <stdexcept>

#include "snse/operators.hpp"

namespace snse {

std::string to_string(NoiseFlavor f) {
    return f == NoiseFlavor::additive ? "additive" : "lipschitz_multiplicative";
}

NoiseFlavor noise_flavor_from_string(const std::string& s) {
    if (s == "additive") return NoiseFlavor::additive;
    if (s == "lipschitz_multiplicative") return NoiseFlavor::lipschitz_multiplicative;
    throw std::invalid_argument("unknown noise flavor: " + s);
}

double mode_amplitude(const NoiseSpec& spec, const BasisMode& mode) {
    return std::pow(1.0 + mode.ksq, -0.5 * spec.alpha);
}

namespace {

double sigma_from_inner(const NoiseSpec& spec, const BasisMode& mode, double h_inner_value) {
    const double a = mode_amplitude(spec, mode);
    if (spec.flavor == NoiseFlavor::additive) return a;
    const double smoothed = std::pow(1.0 + mode.ksq, -spec.g) * h_inner_value;
    return 0.5 * a * (1.0 + std::tanh(smoothed));
}

}  // namespace

double sigma_eval(const NoiseSpec& spec, const NoiseBasis& basis, int j, const SpectralField& v) {
    if (j < 0 || j >= basis.size()) throw std::out_of_range("noise mode index out of range");
    const double inner =
        (spec.flavor == NoiseFlavor::additive || v.empty()) ? 0.0 : basis.h_inner(v, j);
    return sigma_from_inner(spec, basis.mode(j), inner);
}

void sigma_eval_all(const NoiseSpec& spec, const NoiseBasis& basis, const SpectralField& v,
                    std::span<double> out) {
    sigma_eval_all(spec, basis, v, make_noise_tables(spec, basis), out);
}

NoiseTables make_noise_tables(const NoiseSpec& spec, const NoiseBasis& basis) {
    NoiseTables tables;
    tables.amplitude.resize(basis.size());
    tables.smoothing.resize(basis.size());
    for (int j = 0; j < basis.size(); ++j) {
        tables.amplitude[j] = mode_amplitude(spec, basis.mode(j));
        tables.smoothing[j] = std::pow(1.0 + basis.mode(j).ksq, -spec.g);
    }
    return tables;
}

void sigma_eval_all(const NoiseSpec& spec, const NoiseBasis& basis, const SpectralField& v,
                    const NoiseTables& tables, std::span<double> out) {
    if (out.size() != static_cast<std::size_t>(basis.size()))
        throw std::invalid_argument("sigma buffer size mismatch");
    const bool additive = spec.flavor == NoiseFlavor::additive || v.empty();
    if (additive) {
        for (int j = 0; j < basis.size(); ++j) out[j] = tables.amplitude[j];
        if (spec.flavor == NoiseFlavor::lipschitz_multiplicative)
            for (int j = 0; j < basis.size(); ++j) out[j] *= 0.5;
        return;
    }
    for (int j = 0; j < basis.size(); ++j) {
        const double inner = tables.smoothing[j] * basis.h_inner(v, j);
        out[j] = 0.5 * tables.amplitude[j] * (1.0 + std::tanh(inner));
    }
}

SpectralField apply_G(const NoiseSpec& spec, const NoiseBasis& basis, const SpectralField& v,
                      std::span<const double> y) {
    if (y.size() != static_cast<std::size_t>(basis.size()))
        throw std::invalid_argument("coefficient sequence length mismatch");
    SpectralField out(basis.grid());
    for (int j = 0; j < basis.size(); ++j) {
        const double w = sigma_eval(spec, basis, j, v) * y[j];
        if (w != 0.0) basis.add_scaled(out, j, w);
    }
    out.set_solenoidal(true);
    return out;
}

SpectralField apply_Gn(const NoiseSpec& spec, const NoiseBasis& basis, double yosida_n,
                       const SpectralField& v, std::span<const double> y) {
    if (y.size() != static_cast<std::size_t>(basis.size()))
        throw std::invalid_argument("coefficient sequence length mismatch");
    SpectralField out(basis.grid());
    for (int j = 0; j < basis.size(); ++j) {
        const double r = yosida_multiplier(yosida_n, basis.mode(j).ksq);
        const double w = sigma_eval(spec, basis, j, v) * r * y[j];
        if (w != 0.0) basis.add_scaled(out, j, w);
    }
    out.set_solenoidal(true);
    return out;
}

double gamma_radonifying_norm(const NoiseSpec& spec, const NoiseBasis& basis,
                              const SpectralField& v, double s, double p, double yosida_n) {
    if (p != 2.0 && p != 4.0) throw std::invalid_argument("gamma norm supports p in {2, 4}");
    std::vector<double> sigmas(basis.size());
    sigma_eval_all(spec, basis, v, sigmas);

    if (p == 2.0) {
        double sum = 0.0;
        for (int j = 0; j < basis.size(); ++j) {
            const double r = yosida_multiplier(yosida_n, basis.mode(j).ksq);
            sum += sigmas[j] * sigmas[j] * r * r * std::pow(1.0 + basis.mode(j).ksq, s);
        }
        return std::sqrt(sum);
    }

    // L^4 quadrature of the square function x -> (sum_j sigma_j^2 |J^s e_j(x)|^2)^{1/2}.
    // |e_j(x)|^2 = (2/volume) trig^2(kappa . x); evaluate trig via the integer
    // phase table cos/sin(2 pi m / N).
    const auto& grid = basis.grid();
    const int n = grid.modes;
    std::vector<double> cos_table(n), sin_table(n);
    for (int m = 0; m < n; ++m) {
        cos_table[m] = std::cos(two_pi * m / n);
        sin_table[m] = std::sin(two_pi * m / n);
    }
    const std::size_t points = grid.points();
    std::vector<double> square(points, 0.0);
    const double unit = 2.0 / grid.volume();
    for (int j = 0; j < basis.size(); ++j) {
        const auto& mode = basis.mode(j);
        const double r = yosida_multiplier(yosida_n, mode.ksq);
        const double weight =
            sigmas[j] * sigmas[j] * r * r * std::pow(1.0 + mode.ksq, s) * unit;
        if (weight == 0.0) continue;
        for (std::size_t i = 0; i < points; ++i) {
            // integer phase k . x_i mod N where x_i has index coordinates
            std::size_t rest = i;
            int phase = 0;
            if (grid.dim == 2) {
                const int i1 = static_cast<int>(rest % n);
                const int i0 = static_cast<int>(rest / n);
                phase = (mode.k[0] * i0 + mode.k[1] * i1) % n;
            } else {
                const int i2 = static_cast<int>(rest % n);
                rest /= n;
                const int i1 = static_cast<int>(rest % n);
                const int i0 = static_cast<int>(rest / n);
                phase = (mode.k[0] * i0 + mode.k[1] * i1 + mode.k[2] * i2) % n;
            }
            if (phase < 0) phase += n;
            const double trig = mode.sine ? sin_table[phase] : cos_table[phase];
            square[i] += weight * trig * trig;
        }
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < points; ++i) sum += square[i] * square[i];
    return std::pow(grid.cell_volume() * sum, 0.25);
}

double additive_hs_norm(const NoiseSpec& spec, std::span<const BasisMode> modes, double s,
                        double yosida_n) {
    double sum = 0.0;
    for (const auto& m : modes) {
        const double a = mode_amplitude(spec, m);
        const double r = yosida_multiplier(yosida_n, m.ksq);
        sum += a * a * r * r * std::pow(1.0 + m.ksq, s);
    }
    return std::sqrt(sum);
}

double lipschitz_constant(const NoiseSpec& spec, std::span<const BasisMode> modes) {
    if (spec.flavor == NoiseFlavor::additive) return 0.0;
    double sum = 0.0;
    for (const auto& m : modes) {
        const double a = mode_amplitude(spec, m);
        sum += a * a * std::pow(1.0 + m.ksq, -2.0 * spec.g);
    }
    return std::sqrt(0.25 * sum);
}

bool rough_regime_summable(const NoiseSpec& spec, int dim) {
    return spec.alpha + spec.g > 0.5 * dim;
}

}  // namespace snse
