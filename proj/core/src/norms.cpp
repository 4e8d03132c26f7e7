#include "snse/norms.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "snse/fft.hpp"

namespace snse {

const std::vector<double>& bessel_weight_table(const TorusGrid& grid, double s) {
    using Key = std::tuple<int, int, double, double, double>;
    static std::mutex mutex;
    static std::map<Key, std::vector<double>> cache;
    const Key key{grid.dim, grid.modes, grid.period, grid.dealias_fraction, s};
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it == cache.end()) {
        const auto& tables = grid_tables(grid);
        std::vector<double> w(tables.ksq.size());
        for (std::size_t i = 0; i < w.size(); ++i) w[i] = std::pow(1.0 + tables.ksq[i], s);
        it = cache.emplace(key, std::move(w)).first;
    }
    return it->second;
}

double weighted_l2_norm(const SpectralField& f, const std::vector<double>& weights) {
    const std::size_t n = f.points();
    double sum = 0.0;
    for (int c = 0; c < f.components(); ++c) {
        auto comp = f.component(c);
        for (std::size_t i = 0; i < n; ++i) sum += weights[i] * std::norm(comp[i]);
    }
    return std::sqrt(f.grid().volume() * sum);
}

double sobolev_norm(const SpectralField& f, const NormSpec& spec) {
    if (spec.p < 1.0) throw std::invalid_argument("sobolev_norm: p must be at least 1");
    const auto& grid = f.grid();
    const std::size_t n = grid.points();

    if (spec.p == 2.0) return weighted_l2_norm(f, bessel_weight_table(grid, spec.s));

    // synthesise J^s f and integrate |J^s f(x)|^p with the equal-weight rule
    auto& ws = FourierWorkspace::local(grid);
    auto weighted = ws.scratch(5);
    auto phys = ws.scratch(6);
    std::vector<double> mag2(n, 0.0);
    const auto& half_weights = bessel_weight_table(grid, 0.5 * spec.s);
    for (int c = 0; c < f.components(); ++c) {
        auto comp = f.component(c);
        for (std::size_t i = 0; i < n; ++i) weighted[i] = half_weights[i] * comp[i];
        ws.to_physical(weighted, phys);
        for (std::size_t i = 0; i < n; ++i) mag2[i] += std::norm(phys[i]);
    }
    double sum = 0.0;
    if (spec.p == 4.0) {
        for (std::size_t i = 0; i < n; ++i) sum += mag2[i] * mag2[i];
    } else {
        for (std::size_t i = 0; i < n; ++i) sum += std::pow(mag2[i], 0.5 * spec.p);
    }
    return std::pow(grid.cell_volume() * sum, 1.0 / spec.p);
}

double l2_norm(const SpectralField& f) {
    double sum = 0.0;
    for (const auto& c : f.raw()) sum += std::norm(c);
    return std::sqrt(f.grid().volume() * sum);
}

double grad_l2_norm(const SpectralField& f) {
    const auto& tables = grid_tables(f.grid());
    const std::size_t n = f.points();
    double sum = 0.0;
    for (int c = 0; c < f.components(); ++c) {
        auto comp = f.component(c);
        for (std::size_t i = 0; i < n; ++i) sum += tables.ksq[i] * std::norm(comp[i]);
    }
    return std::sqrt(f.grid().volume() * sum);
}

double lp_norm(const SpectralField& f, double p) { return sobolev_norm(f, NormSpec{0.0, p}); }

double duality_pairing(const SpectralField& a, const SpectralField& b, double s) {
    if (!(a.grid() == b.grid())) throw std::invalid_argument("duality_pairing: grid mismatch");
    const std::size_t n = a.points();
    const auto& wa = bessel_weight_table(a.grid(), 0.5 * s);
    const auto& wb = bessel_weight_table(a.grid(), -0.5 * s);
    double sum = 0.0;
    for (int c = 0; c < a.components(); ++c) {
        auto ac = a.component(c);
        auto bc = b.component(c);
        for (std::size_t i = 0; i < n; ++i) sum += (wa[i] * ac[i] * std::conj(wb[i] * bc[i])).real();
    }
    return a.grid().volume() * sum;
}

}  // namespace snse
