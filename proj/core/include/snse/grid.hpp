#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace snse {

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;

/// Uniform periodic grid on [0, period)^dim with `modes` Fourier modes per
/// axis.  Wavenumber indices run over {-modes/2+1, ..., modes/2} in FFT
/// storage order; physical wavenumbers carry the 2*pi/period scale.
struct TorusGrid {
    int dim = 2;
    int modes = 64;
    double period = two_pi;
    double dealias_fraction = 2.0 / 3.0;

    std::size_t axis_points() const { return static_cast<std::size_t>(modes); }

    std::size_t points() const {
        std::size_t n = 1;
        for (int a = 0; a < dim; ++a) n *= axis_points();
        return n;
    }

    double volume() const {
        double v = 1.0;
        for (int a = 0; a < dim; ++a) v *= period;
        return v;
    }

    double cell_volume() const { return volume() / static_cast<double>(points()); }

    /// Signed integer wavenumber of a storage index along one axis.
    int wavenumber(int index) const { return index <= modes / 2 ? index : index - modes; }

    /// Storage index of a signed integer wavenumber along one axis.
    int index_of(int k) const { return k >= 0 ? k : k + modes; }

    double kappa_scale() const { return two_pi / period; }

    /// Largest |k_i| kept by the dealias mask (2/3 rule by default).
    int dealias_limit() const {
        return static_cast<int>(dealias_fraction * (modes / 2) + 1e-12);
    }

    std::array<int, 3> wavevector(std::size_t flat) const {
        std::array<int, 3> k{0, 0, 0};
        const int n = modes;
        if (dim == 2) {
            k[1] = wavenumber(static_cast<int>(flat % n));
            k[0] = wavenumber(static_cast<int>(flat / n));
        } else {
            k[2] = wavenumber(static_cast<int>(flat % n));
            flat /= n;
            k[1] = wavenumber(static_cast<int>(flat % n));
            k[0] = wavenumber(static_cast<int>(flat / n));
        }
        return k;
    }

    std::size_t flat_index(const std::array<int, 3>& k) const {
        const std::size_t n = axis_points();
        if (dim == 2) return static_cast<std::size_t>(index_of(k[0])) * n + index_of(k[1]);
        return (static_cast<std::size_t>(index_of(k[0])) * n + index_of(k[1])) * n + index_of(k[2]);
    }

    bool in_dealias_band(const std::array<int, 3>& k) const {
        const int lim = dealias_limit();
        for (int a = 0; a < dim; ++a)
            if (k[a] > lim || k[a] < -lim) return false;
        return true;
    }

    bool operator==(const TorusGrid& o) const {
        return dim == o.dim && modes == o.modes && period == o.period &&
               dealias_fraction == o.dealias_fraction;
    }
};

/// Validating factory; throws std::invalid_argument on a bad parameter.
TorusGrid make_grid(int dim, int modes, double period = two_pi,
                    double dealias_fraction = 2.0 / 3.0);

/// Per-grid lookup tables shared by the multiplier operators.
struct GridTables {
    std::vector<double> ksq;         ///< physical |kappa|^2 per flat index
    std::vector<std::uint8_t> keep;  ///< 1 if inside the dealias band
};

/// Cached tables for a grid (thread-safe, keyed by grid parameters).
const GridTables& grid_tables(const TorusGrid& grid);

}  // namespace snse
