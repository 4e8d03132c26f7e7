#pragma once

#include <array>
#include <vector>

#include "snse/field.hpp"
#include "snse/grid.hpp"

namespace snse {

/// One real divergence-free trigonometric mode: a cosine or sine wave at
/// integer wavevector k with polarisation orthogonal to k, normalised to
/// unit L^2 norm on the torus.
struct BasisMode {
    std::array<int, 3> k{0, 0, 0};
    std::array<double, 3> pol{0.0, 0.0, 0.0};
    bool sine = false;
    double ksq = 0.0;  ///< physical |kappa|^2
};

/// Enumerate the first `count` basis modes for dimension dim on a torus of
/// the given period.  Wavevectors run over the half lattice (first nonzero
/// component positive), sorted by (|k|^2, lexicographic); each wavevector
/// contributes its polarisations (one for d=2, two for d=3), cosine before
/// sine.  Grid-independent, so norm sums can be taken far beyond any grid.
std::vector<BasisMode> enumerate_basis(int dim, int count, double period = two_pi);

/// Grid-bound view of the basis used to build noise fields.  All modes must
/// lie inside the grid dealias band.
class NoiseBasis {
  public:
    NoiseBasis(const TorusGrid& grid, int count);  // count <= 0: all dealiased modes

    const TorusGrid& grid() const { return grid_; }
    int size() const { return static_cast<int>(modes_.size()); }
    const BasisMode& mode(int j) const { return modes_[j]; }
    const std::vector<BasisMode>& modes() const { return modes_; }

    /// Materialise e_j as a spectral field (unit L^2 norm, solenoidal).
    SpectralField field(int j) const;

    /// acc += w * e_j; touches exactly the two modes +-k.
    void add_scaled(SpectralField& acc, int j, double w) const;

    /// H inner product <v, e_j>; O(1) given the coefficients of v.
    double h_inner(const SpectralField& v, int j) const;

    /// Number of basis modes inside the dealias band of `grid`.
    static int dealiased_count(const TorusGrid& grid);

  private:
    TorusGrid grid_;
    std::vector<BasisMode> modes_;
    std::vector<std::size_t> flat_plus_;   ///< flat index of +k
    std::vector<std::size_t> flat_minus_;  ///< flat index of -k
};

}  // namespace snse
