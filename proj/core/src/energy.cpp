#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "snse/inequalities.hpp"
#include "snse/solver.hpp"

namespace snse {

// The constant C of phi = nu/2 + 2C||z||_{L^4}^{8/(4-d)} and
// psi = 2C(||z||_{L^4}^4 + ||f||_{H^{-1}}^2), assembled from the energy
// estimate chain: Hoelder on the trilinear term, Gagliardo-Nirenberg with
// the calibrated constant, and weighted Young splittings that absorb half
// of the 2 nu ||grad u||^2 dissipation.
double energy_chain_constant(double gn_constant, double nu, int dim) {
    if (!(nu > 0.0)) throw std::invalid_argument("energy_chain_constant: nu must be positive");
    if (dim != 2 && dim != 3) throw std::invalid_argument("energy_chain_constant: dim in {2,3}");
    const double p = 8.0 / (4.0 + dim);
    const double q = 8.0 / (4.0 - dim);
    const double eps1 = 0.25 * nu;
    // x y <= eps x^p + C(eps) y^q with C(eps) = q^{-1} (eps p)^{-q/p}
    const double young = std::pow(eps1 * p, -q / p) / q;
    const double c1 = young * std::pow(2.0 * gn_constant, q);
    return std::max(0.5 * c1, 2.0 / nu);
}

double default_energy_constant(const TorusGrid& grid, double nu) {
    using Key = std::tuple<int, int, double, double>;
    static std::mutex mutex;
    static std::map<Key, double> cache;
    const Key key{grid.dim, grid.modes, grid.period, nu};
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    const double gn = calibrate_gn_constant(grid, 160, 0x676e63616cULL);
    const double value = energy_chain_constant(gn, nu, grid.dim);
    std::lock_guard<std::mutex> lock(mutex);
    cache.emplace(key, value);
    return value;
}

EnergyReport energy_report(const TrajectorySample& traj, const SolverConfig& config) {
    const auto& d = traj.diagnostics;
    if (d.t.size() < 2) throw std::invalid_argument("energy_report: trajectory too short");
    EnergyReport report;
    report.t = d.t;
    report.phi = d.phi;
    report.psi = d.psi;
    report.majorant = d.majorant;
    report.energy_u = d.energy_u;

    const double dt = config.dt;
    const double nu = config.nu;
    report.residual.resize(d.t.size(), 0.0);
    for (std::size_t m = 0; m + 1 < d.t.size(); ++m) {
        const double de = (d.energy_u[m + 1] - d.energy_u[m]) / dt;
        const double dd = 2.0 * nu * (d.dissipation[m + 1] - d.dissipation[m]) / dt;
        report.residual[m] = de + dd + 2.0 * d.trilinear[m] - 2.0 * d.forcing_u[m];
    }

    report.sup_energy = 0.0;
    report.majorant_holds = true;
    for (std::size_t m = 0; m < d.t.size(); ++m) {
        report.sup_energy = std::max(report.sup_energy, d.energy_u[m]);
        if (d.energy_u[m] > d.majorant[m] * (1.0 + 1e-12)) report.majorant_holds = false;
    }
    report.final_majorant = d.majorant.back();

    // integrated dissipation check: nu int ||grad u||^2 <= ||v0||^2 + int(phi E + psi)
    report.dissipation_lhs = nu * d.dissipation.back();
    double rhs = d.energy_u.front();
    for (std::size_t m = 0; m + 1 < d.t.size(); ++m) {
        const double a = d.phi[m] * d.energy_u[m] + d.psi[m];
        const double b = d.phi[m + 1] * d.energy_u[m + 1] + d.psi[m + 1];
        rhs += 0.5 * dt * (a + b);
    }
    report.dissipation_rhs = rhs;

    report.linear_balance_defect =
        d.energy_u.back() + 2.0 * nu * d.dissipation.back() - d.energy_u.front();
    return report;
}

}  // namespace snse
