#include "snse/grid.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace snse {

TorusGrid make_grid(int dim, int modes, double period, double dealias_fraction) {
    if (dim != 2 && dim != 3) throw std::invalid_argument("grid dimension must be 2 or 3");
    if (modes < 8 || modes % 2 != 0)
        throw std::invalid_argument("grid modes must be even and at least 8");
    if (!(period > 0.0)) throw std::invalid_argument("grid period must be positive");
    if (!(dealias_fraction > 0.0 && dealias_fraction <= 1.0))
        throw std::invalid_argument("dealias fraction must lie in (0, 1]");
    return TorusGrid{dim, modes, period, dealias_fraction};
}

namespace {

GridTables build_tables(const TorusGrid& grid) {
    GridTables t;
    const std::size_t n = grid.points();
    t.ksq.resize(n);
    t.keep.resize(n);
    const double scale2 = grid.kappa_scale() * grid.kappa_scale();
    for (std::size_t i = 0; i < n; ++i) {
        const auto k = grid.wavevector(i);
        double ksq = 0.0;
        for (int a = 0; a < grid.dim; ++a) ksq += static_cast<double>(k[a]) * k[a];
        t.ksq[i] = scale2 * ksq;
        t.keep[i] = grid.in_dealias_band(k) ? 1 : 0;
    }
    return t;
}

}  // namespace

const GridTables& grid_tables(const TorusGrid& grid) {
    using Key = std::tuple<int, int, double, double>;
    static std::mutex mutex;
    static std::map<Key, GridTables> cache;
    const Key key{grid.dim, grid.modes, grid.period, grid.dealias_fraction};
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, build_tables(grid)).first;
    return it->second;
}

}  // namespace snse
