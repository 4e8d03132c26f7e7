#include "snse/operators.hpp"

#include <cmath>
#include <stdexcept>

#include "snse/fft.hpp"

namespace snse {

SpectralField leray_project(const SpectralField& f) {
    const auto& grid = f.grid();
    SpectralField out = f;
    const int d = grid.dim;
    for (std::size_t i = 0; i < grid.points(); ++i) {
        const auto k = grid.wavevector(i);
        double ksq = 0.0;
        for (int a = 0; a < d; ++a) ksq += static_cast<double>(k[a]) * k[a];
        if (ksq == 0.0) {
            for (int c = 0; c < d; ++c) out.at(c, i) = Complex{0.0, 0.0};
            continue;
        }
        Complex kdotv{0.0, 0.0};
        for (int c = 0; c < d; ++c) kdotv += static_cast<double>(k[c]) * f.at(c, i);
        kdotv /= ksq;
        for (int c = 0; c < d; ++c) out.at(c, i) -= static_cast<double>(k[c]) * kdotv;
    }
    out.set_solenoidal(true);
    return out;
}

namespace {

template <class Mult>
SpectralField diagonal_apply(const SpectralField& f, Mult&& mult) {
    const auto& tables = grid_tables(f.grid());
    SpectralField out = f;
    const std::size_t n = f.points();
    for (int c = 0; c < f.components(); ++c) {
        auto comp = out.component(c);
        for (std::size_t i = 0; i < n; ++i) comp[i] *= mult(tables.ksq[i]);
    }
    return out;
}

}  // namespace

SpectralField bessel_potential(const SpectralField& f, double s) {
    if (s == 0.0) return f;
    const double half = 0.5 * s;
    return diagonal_apply(f, [half](double ksq) { return std::pow(1.0 + ksq, half); });
}

SpectralField stokes_semigroup(const SpectralField& f, double t, double nu) {
    if (t < 0.0) throw std::invalid_argument("stokes_semigroup: negative time");
    if (!(nu > 0.0)) throw std::invalid_argument("stokes_semigroup: viscosity must be positive");
    return diagonal_apply(f, [t, nu](double ksq) { return std::exp(-nu * ksq * t); });
}

SpectralField yosida_smoother(const SpectralField& f, double n) {
    if (!(n > 0.0)) throw std::invalid_argument("yosida_smoother: level must be positive");
    return diagonal_apply(f, [n](double ksq) { return yosida_multiplier(n, ksq); });
}

void apply_dealias_mask(SpectralField& f) {
    const auto& tables = grid_tables(f.grid());
    const std::size_t n = f.points();
    for (int c = 0; c < f.components(); ++c) {
        auto comp = f.component(c);
        for (std::size_t i = 0; i < n; ++i)
            if (!tables.keep[i]) comp[i] = Complex{0.0, 0.0};
    }
}

SpectralField advection(const SpectralField& u, const SpectralField& v) {
    const auto& grid = u.grid();
    if (!(grid == v.grid())) throw std::invalid_argument("advection: grid mismatch");
    const int d = grid.dim;
    const std::size_t n = grid.points();
    const double scale = grid.kappa_scale();
    const auto& tables = grid_tables(grid);
    auto& ws = FourierWorkspace::local(grid);

    // physical samples of the masked advecting field
    std::vector<std::span<Complex>> uphys(d);
    std::vector<Complex> masked(n);
    for (int c = 0; c < d; ++c) {
        auto src = u.component(c);
        for (std::size_t i = 0; i < n; ++i) masked[i] = tables.keep[i] ? src[i] : Complex{0, 0};
        uphys[c] = ws.scratch(c);
        ws.to_physical(masked, uphys[c]);
    }

    auto grad = ws.scratch(3);
    auto accum = ws.scratch(4);
    SpectralField out(grid);
    for (int c = 0; c < d; ++c) {
        std::fill(accum.begin(), accum.end(), Complex{0.0, 0.0});
        auto vc = v.component(c);
        for (int a = 0; a < d; ++a) {
            for (std::size_t i = 0; i < n; ++i) {
                const auto k = grid.wavevector(i);
                const Complex coeff = tables.keep[i] ? vc[i] : Complex{0, 0};
                masked[i] = Complex{0.0, scale * k[a]} * coeff;  // i kappa_a v_c
            }
            ws.to_physical(masked, grad);
            const auto ua = uphys[a];
            for (std::size_t i = 0; i < n; ++i) accum[i] += ua[i] * grad[i];
        }
        ws.to_spectral(accum, out.component(c));
    }
    apply_dealias_mask(out);
    out = leray_project(out);
    remove_mean(out);
    out.set_solenoidal(true);
    return out;
}

}  // namespace snse
